from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from appell.appell import appell_poly, sigma
from appell.family import AppellFamily, make_family
from appell.poly import BivariatePolynomial, Polynomial
from appell.umbral import (
    Substitution,
    alpha_rs,
    ap_rs,
    ap_rs_bivariate,
    as_umbral_crosscheck,
    check_umbral_reciprocity,
)

from conftest import random_alpha_family


def test_examples(bernoulli):
    for n in range(6):
        assert ap_rs(bernoulli, 0, n) == appell_poly(bernoulli, n)
        assert alpha_rs(bernoulli, 0, n) == bernoulli.alpha(n)
    assert ap_rs(bernoulli, 1, 0) == Polynomial([Fraction(1, 2), 1])
    assert alpha_rs(bernoulli, 1, 1) == Fraction(-1, 3)


def test_rank_is_a_shift_by_one(reflecting):
    # (A(x)+1)^r A(x)^s evaluated umbrally equals A_{r+s}-type sums; at s = 0 it is A_r(x+1)
    for r in range(10):
        assert ap_rs(reflecting, r, 0) == appell_poly(reflecting, r).shift(1)


def test_negative_indices_rejected(bernoulli):
    for f in (ap_rs, alpha_rs, ap_rs_bivariate):
        with pytest.raises(ValueError):
            f(bernoulli, -1, 0)


@pytest.mark.parametrize("name", ["bernoulli", "euler"])
def test_reciprocity_report(name):
    rep = check_umbral_reciprocity(make_family(name), 8)
    assert rep.ok, rep.failures()[:3]
    ids = {c.identity_id for c in rep.cases}
    assert {"ap-recip", "ac-recip", "ap-biv-1", "ap-biv-2", "ladder-rank", "ladder-shift"} <= ids


def test_non_reflecting_family_runs_only_general_identities():
    rep = check_umbral_reciprocity(random_alpha_family(3), 6)
    assert rep.ok, rep.failures()[:3]
    ids = {c.identity_id for c in rep.cases}
    assert "ap-biv-1" in ids
    assert not ids & {"ap-recip", "ac-recip", "ap-biv-2"}


def test_false_reflection_claim_is_caught():
    alphas = make_family("bernoulli").alphas(20)
    alphas[4] += 1
    rep = check_umbral_reciprocity(AppellFamily("bad", alphas, True), 5, bivariate=False)
    assert not rep.passed("ap-recip")
    assert rep.passed("ap-rs-recurrence")


@pytest.mark.parametrize("n", range(12))
def test_sigma_umbral_crosscheck(reflecting, n):
    assert as_umbral_crosscheck(reflecting, n).ok


def test_sigma_endpoint_chain(bernoulli):
    for n in range(10):
        table = sigma(bernoulli, n)
        assert table[0] == alpha_rs(bernoulli, n, 0) == appell_poly(bernoulli, n)(1)
        assert table[n] == alpha_rs(bernoulli, 0, n) == bernoulli.alpha(n)
    assert sigma(bernoulli, 2)[1] == 2 * alpha_rs(bernoulli, 1, 1) == Fraction(-2, 3)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1000), st.integers(0, 6), st.integers(0, 6))
def test_bivariate_identities_any_family(seed, r, s):
    F = random_alpha_family(seed)
    B = ap_rs_bivariate(F, r, s)
    x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
    assert B == Substitution(x + y, -y)(ap_rs_bivariate(F, s, r))
    assert B.specialize_y(1) == ap_rs(F, r, s)
    assert B.specialize_y(0) == appell_poly(F, r + s)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1000), st.integers(0, 8), st.integers(0, 8))
def test_alpha_rs_direct_oracle(seed, r, s):
    # expand (a+1)^r a^s and replace a^m by alpha_m
    F = random_alpha_family(seed)
    want = sum((comb(r, j) * F.alpha(s + j) for j in range(r + 1)), Fraction(0))
    assert alpha_rs(F, r, s) == want == ap_rs(F, r, s)(0)


def test_substitution_matches_generic_method():
    B = BivariatePolynomial({(2, 1): 3, (0, 3): Fraction(-1, 2), (1, 0): 1})
    x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
    img_x, img_y = 1 - x - y, y
    assert Substitution(img_x, img_y)(B) == B.substitute(img_x, img_y)
