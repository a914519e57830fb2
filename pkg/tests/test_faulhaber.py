from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from appell.appell import ReflectionRequired, appell_poly
from appell.exact_arith import binomial, falling_factorial
from appell.family import AppellFamily, bernoulli_number, genocchi_number, make_family
from appell.faulhaber import (
    ROUTES,
    FaulhaberPoly,
    a_nk,
    faulhaber_all_routes,
    faulhaber_decompose,
    fp_deriv_lemma_check,
    fp_expr,
    fp_main_check,
    fp_reconstruct,
    fp_recurrence_check,
    fp_value_identities,
    genocchi_zero_sum,
    half_shift_expand,
    lambda_sum,
    lambda_table,
    symmetry_cascade,
)
from appell.poly import Polynomial

from conftest import random_alpha_family

half = Fraction(1, 2)


def _divmod(num, den):
    """Exact long division of coefficient lists (ascending powers)."""
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    return q, num[: len(den) - 1]


def divide_out_u(A, n):
    """F_n(u) coefficients by stripping (2x-1) and then peeling off u = x^2 - x."""
    cs = list(A.coeffs)
    if n % 2:
        cs, rem = _divmod(cs, [-1, 2])
        assert all(r == 0 for r in rem)
    out = []
    while cs:
        cs, rem = _divmod(cs, [0, -1, 1]) if len(cs) > 2 else ([], cs)
        # remainder mod x^2 - x must be a constant for a reflection-symmetric polynomial
        assert len(rem) < 2 or rem[1] == 0
        out.append(rem[0] if rem else Fraction(0))
    return tuple(out)


@pytest.mark.parametrize("n", range(30))
def test_division_oracle(reflecting, n):
    FP = faulhaber_decompose(reflecting, n)
    want = divide_out_u(appell_poly(reflecting, n), n)
    assert FP.fp[: len(want)] == want
    assert all(c == 0 for c in FP.fp[len(want):])


def test_examples(bernoulli, euler):
    for route in ROUTES:
        assert faulhaber_decompose(bernoulli, 3, route).fp == (0, half)
        assert faulhaber_decompose(euler, 3, route).fp == (Fraction(-1, 4), half)
        assert faulhaber_decompose(euler, 1, route).fp == (half,)
    assert fp_reconstruct(FaulhaberPoly(3, (0, half))) == Polynomial([0, half, Fraction(-3, 2), 1])
    assert fp_reconstruct(FaulhaberPoly(0, (Fraction(7),))) == 7


def test_half_shift_values(bernoulli):
    vals = half_shift_expand(bernoulli, 20)
    assert vals[0] == 1
    for v in range(1, len(vals)):
        assert vals[v] == bernoulli_number(2 * v) + genocchi_number(2 * v) / 2


def test_lambda_and_a_nk_small_k(reflecting):
    F = reflecting
    for n in range(1, 15):
        assert lambda_sum(F, n, 0) == F.alpha(n)
        assert lambda_sum(F, n, 1) == 2 * F.alpha(n) + n * F.alpha(n - 1)
        assert a_nk(F, n, 0) == (-1) ** n * F.alpha(n)
        assert a_nk(F, n, 1) == (-1) ** n * (2 * F.alpha(n) + n * F.alpha(n - 1))


def test_lambda_range_checked(bernoulli):
    with pytest.raises(ValueError):
        lambda_sum(bernoulli, 2, 3)
    with pytest.raises(ValueError):
        a_nk(bernoulli, 2, 3)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_lambda_recurrence_random_alpha(seed):
    assert lambda_table(random_alpha_family(seed, bound=50), 14).recurrence_holds()


def test_lambda_table_detects_corruption(bernoulli):
    table = lambda_table(bernoulli, 8)
    rows = [list(r) for r in table.rows]
    rows[6][2] += 1
    broken = type(table)(8, tuple(tuple(r) for r in rows))
    assert not broken.recurrence_holds()


@pytest.mark.parametrize("n", range(1, 16, 2))
def test_main_theorem(reflecting, n):
    rep = fp_main_check(reflecting, n)
    assert rep.ok, rep.failures()[:3]


def test_main_theorem_rejects_even(bernoulli):
    with pytest.raises(ValueError):
        fp_main_check(bernoulli, 4)


def test_fp_expr_independent_of_route(reflecting):
    for n in range(1, 14, 2):
        FP = faulhaber_decompose(reflecting, n, "recurrence")
        for k in range(n + 1):
            e1, e2 = fp_expr(reflecting, n, k)
            assert e1 == e2 == FP.f(k)


def test_cascade_euler_example(euler):
    rep = symmetry_cascade(euler, 3, 2)
    assert rep.ok and len({c.identity_id for c in rep.cases}) == 7


def test_cascade_bounds(bernoulli):
    with pytest.raises(ValueError):
        symmetry_cascade(bernoulli, 5, 2)
    with pytest.raises(ValueError):
        symmetry_cascade(bernoulli, 4, 3)


def test_genocchi_example():
    assert genocchi_zero_sum(1, 1) == genocchi_number(2) + genocchi_number(1) == 0
    # below the range the sum need not vanish
    assert any(genocchi_zero_sum(n, k) != 0 for n in range(3, 12, 2) for k in range(n // 2 + 1))


def test_recurrence_example(bernoulli):
    F3 = faulhaber_decompose(bernoulli, 3).as_polynomial()
    F4 = faulhaber_decompose(bernoulli, 4).as_polynomial()
    assert F3 * 4 == F4.derivative() == Polynomial([0, 2])


@pytest.mark.parametrize("n", range(2, 18))
def test_recurrences(reflecting, n):
    rep = fp_recurrence_check(reflecting, n)
    assert rep.ok, rep.failures()[:3]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 12), st.lists(st.fractions(max_denominator=20, min_value=-20, max_value=20), min_size=7, max_size=7))
def test_deriv_lemma_holds_for_any_coefficients(n, cs):
    FP = FaulhaberPoly(n, tuple(cs[: n // 2 + 1]))
    assert fp_deriv_lemma_check(FP).ok


@pytest.mark.parametrize("n", range(20))
def test_value_identities(reflecting, n):
    rep = fp_value_identities(reflecting, n)
    assert rep.ok, rep.failures()


def test_h_is_factorial_scaled(bernoulli):
    FP = faulhaber_decompose(bernoulli, 9)
    assert FP.fh == tuple(factorial(k) * FP.f(k) for k in range(FP.d + 1))
    assert FP.f(FP.d + 1) == 0


def test_all_routes_helper(euler):
    FP, agree = faulhaber_all_routes(euler, 17)
    assert agree and FP == faulhaber_decompose(euler, 17, "reciprocal")


def test_unknown_route(bernoulli):
    with pytest.raises(ValueError):
        faulhaber_decompose(bernoulli, 3, "magic")


def test_reflection_required():
    with pytest.raises(ReflectionRequired):
        faulhaber_decompose(random_alpha_family(1), 3)
    alphas = make_family("bernoulli").alphas(10)
    alphas[5] = Fraction(1)
    liar = AppellFamily("liar", alphas, True)
    faulhaber_decompose(liar, 4)  # fine below the violation
    with pytest.raises(ReflectionRequired, match="A_5"):
        faulhaber_decompose(liar, 6)


def test_negative_upper_binomial_values():
    # f_{n,k} in sigma form uses C(2k - n, k - v) with 2k - n possibly negative
    assert binomial(-1, 1) == -1 and falling_factorial(-1, 2) == 2
