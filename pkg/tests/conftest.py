import random
from fractions import Fraction

import pytest

from appell.family import AppellFamily, make_family


def random_alpha_family(seed, name=None, reflection=False, bound=9):
    """Unbounded family whose alpha_n are seeded random rationals."""
    def alpha(n):
        rng = random.Random(f"{seed}:{n}")
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return AppellFamily(name or f"random{seed}", alpha, reflection)


@pytest.fixture(scope="session")
def bernoulli():
    return make_family("bernoulli")


@pytest.fixture(scope="session")
def euler():
    return make_family("euler")


@pytest.fixture(scope="session", params=["bernoulli", "euler"])
def reflecting(request):
    return make_family(request.param)


@pytest.fixture
def rng():
    return random.Random(20240601)


_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "acceptance" not in report.keywords:
        return
    label = report.nodeid.split("::")[-1]
    _acceptance_lines.append(f"{'PASS' if report.passed else 'FAIL'} {label}")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_lines:
        terminalreporter.write_line(line)
