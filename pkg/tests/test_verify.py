import pytest

from appell.family import AppellFamily, make_family
from appell.verify import SUITES, run_verify

from conftest import random_alpha_family


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_for_builtins(suite):
    rep = run_verify(suite, 8, [make_family("bernoulli"), make_family("euler")], seed=1)
    assert rep.ok, rep.failures()[:3]
    assert rep.cases


def test_case_tags():
    rep = run_verify("reflection", 3, [make_family("euler")])
    assert all(c.identity_id.startswith("reflection.") for c in rep.cases)
    assert all(c.params.startswith("euler:") for c in rep.cases)


def test_sorted_and_reproducible():
    fams = [make_family("bernoulli")]
    a = run_verify("all", 5, fams, seed=3).to_json()
    b = run_verify("all", 5, fams, seed=3).to_json()
    assert a == b
    keys = [(c["identity_id"], c["params"]) for c in a["cases"]]
    assert keys == sorted(keys)


def test_non_reflecting_family_general_checks_pass():
    rep = run_verify("umbral", 6, [random_alpha_family(11)])
    assert rep.ok
    rep = run_verify("faulhaber", 10, [random_alpha_family(12)])
    assert rep.ok and [c.identity_id for c in rep.cases] == ["faulhaber.la-recur"]


def test_false_claim_reported_not_raised():
    alphas = make_family("bernoulli").alphas(40)
    alphas[3] += 1
    rep = run_verify("faulhaber", 6, [AppellFamily("liar", alphas, True)])
    assert not rep.ok
    assert any(c.identity_id == "faulhaber.faulhaber-error" for c in rep.failures())


def test_short_family_reports_range():
    rep = run_verify("all", 5, [make_family("custom", [1, 0])])
    failed = {c.identity_id for c in rep.failures()}
    assert "reflection.R4" in failed
    assert "umbral.alpha-range" in failed


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_verify("nope", 3, [])
    with pytest.raises(ValueError):
        run_verify("all", 0, [])
