import importlib
import os
import subprocess
import sys
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from appell import _kernels_py, kernels

ints = st.integers(-10**12, 10**12)
int_lists = st.lists(ints, max_size=25)

BACKENDS = [_kernels_py]
try:
    BACKENDS.append(importlib.import_module("appell._kernels"))
except ImportError:  # extension not built
    pass


def _naive_eval(a, x):
    return sum((Fraction(c) * x**i for i, c in enumerate(a)), Fraction(0))


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__)
class TestBackend:
    @given(int_lists, int_lists)
    def test_convolve_against_naive(self, impl, a, b):
        want = [0] * (len(a) + len(b) - 1) if a and b else []
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                want[i + j] += x * y
        assert list(impl.convolve(a, b)) == want

    @given(int_lists, st.integers(-50, 50), st.fractions(max_denominator=30))
    def test_taylor_shift_evaluates_shifted(self, impl, a, c, x):
        shifted = impl.taylor_shift(a, c)
        assert _naive_eval(shifted, x) == _naive_eval(a, x + c)

    @given(int_lists, st.integers(-10**6, 10**6), st.integers(1, 10**6))
    def test_horner_is_scaled_value(self, impl, a, p, q):
        if not a:
            return
        got = impl.horner(a, p, q)
        assert Fraction(got, q ** (len(a) - 1)) == _naive_eval(a, Fraction(p, q))

    @given(st.integers(-30, 30), st.integers(0, 30))
    def test_binomial_row(self, impl, m, jmax):
        row = impl.binomial_row(m, jmax)
        assert len(row) == jmax + 1
        for j, v in enumerate(row):
            if m >= 0:
                assert v == comb(m, j)
            else:
                # C(m, j) = (-1)^j C(j - m - 1, j)
                assert v == (-1) ** j * comb(j - m - 1, j)

    def test_big_integers(self, impl):
        a = [10**40 + 7, -(10**39), 3]
        assert impl.convolve(a, a)[0] == (10**40 + 7) ** 2
        assert impl.taylor_shift(a, 10**20)[0] == _naive_eval(a, Fraction(10**20))


def test_backends_agree_exactly(rng):
    if len(BACKENDS) < 2:
        pytest.skip("compiled extension not built")
    py, cy = BACKENDS
    for _ in range(200):
        a = [rng.randint(-10**30, 10**30) for _ in range(rng.randint(0, 30))]
        b = [rng.randint(-10**30, 10**30) for _ in range(rng.randint(0, 30))]
        c = rng.randint(-1000, 1000)
        assert list(py.convolve(a, b)) == list(cy.convolve(a, b))
        assert list(py.taylor_shift(a, c)) == list(cy.taylor_shift(a, c))
        if a:
            assert py.horner(a, c, 7) == cy.horner(a, c, 7)


def test_fallback_selected_by_environment():
    code = (
        "from appell import kernels\n"
        "from appell.family import make_family\n"
        "from appell.faulhaber import faulhaber_decompose\n"
        "print(kernels.BACKEND, faulhaber_decompose(make_family('euler'), 15).fp)\n"
    )
    outs = {}
    for flag in ("1", "0"):
        env = dict(os.environ, APPELL_PURE_PYTHON=flag)
        proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, _, values = proc.stdout.partition(" ")
        outs[flag] = (backend, values)
    assert outs["1"][0] == "python"
    assert outs["1"][1] == outs["0"][1]
