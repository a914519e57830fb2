from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from appell.poly import (
    BivariatePolynomial,
    LaurentPolynomial,
    PalindromeClass,
    Polynomial,
    TruncatedSeries,
    palindrome_class,
    poly_derivative,
    poly_eval,
    poly_shift,
    reciprocal_star,
    series_from_poly_times_binomial_power,
)

small = st.fractions(min_value=-50, max_value=50, max_denominator=12)
coeff_lists = st.lists(small, max_size=9)


def P(*cs, index=None):
    return Polynomial(cs, index)


B3 = P(0, Fraction(1, 2), Fraction(-3, 2), 1)


@pytest.mark.parametrize(
    "poly, x, want",
    [(P(0, -1, 1), 2, 2), (P(0, -1, 1), 0, 0), (B3, Fraction(1, 2), 0)],
)
def test_eval_examples(poly, x, want):
    assert poly_eval(poly, x) == want


@pytest.mark.parametrize(
    "poly, ell, want",
    [(P(0, 0, 1), 1, P(0, 2)), (P(0, 0, 1), 3, P()), (P(0, -1, 0, 1), 2, P(0, 6))],
)
def test_derivative_examples(poly, ell, want):
    assert poly_derivative(poly, ell) == want


@pytest.mark.parametrize(
    "poly, c, want",
    [(P(0, 0, 1), 1, P(1, 2, 1)), (B3, 0, B3), (P(0, -1, 1), 1, P(0, 1, 1))],
)
def test_shift_examples(poly, c, want):
    assert poly_shift(poly, c) == want


@pytest.mark.parametrize(
    "poly, want",
    [(P(1, 2, 3, index=2), P(3, 2, 1)), (P(0, 1, index=2), P(0, 1)), (P(1, 1, index=1), P(1, 1))],
)
def test_star_examples(poly, want):
    assert reciprocal_star(poly) == want


@pytest.mark.parametrize(
    "poly, want",
    [
        (P(1, 2, 1, index=2), PalindromeClass.PALINDROMIC),
        (P(Fraction(1, 2), 0, Fraction(-1, 2), index=2), PalindromeClass.ANTI_PALINDROMIC),
        # c_v = -c_{3-v} for every v, so this one is anti-palindromic
        (P(1, -1, 1, -1, index=3), PalindromeClass.ANTI_PALINDROMIC),
        (P(1, 1, -1, 1, index=3), PalindromeClass.QUASI_PALINDROMIC_ONLY),
        (P(1, 2, index=1), PalindromeClass.NONE),
    ],
)
def test_palindrome_examples(poly, want):
    assert palindrome_class(poly) == want


def test_index_must_cover_degree():
    with pytest.raises(ValueError):
        reciprocal_star(P(1, 2, 3, index=1))
    with pytest.raises(ValueError):
        palindrome_class(P(1, 2, 3, index=1))


def test_series_examples():
    s = series_from_poly_times_binomial_power(P(1), -1, 3)
    assert s.coeffs == (1, -1, 1, -1)
    assert series_from_poly_times_binomial_power(P(1, 1), 1) == P(1, 2, 1)
    assert series_from_poly_times_binomial_power(P(1), 0, 5) == P(1)
    with pytest.raises(ValueError):
        series_from_poly_times_binomial_power(P(1), -2)


def test_series_coefficient_past_order_raises():
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2], 1).coeff(2)


@given(coeff_lists, st.integers(0, 4))
def test_star_is_an_involution(cs, extra):
    p = Polynomial(cs)
    p = p.with_index(p.index + extra)
    assert reciprocal_star(reciprocal_star(p).with_index(p.index)) == p


@given(coeff_lists, coeff_lists)
def test_star_is_multiplicative(a, b):
    p, q = Polynomial(a), Polynomial(b)
    assert reciprocal_star(p * q) == reciprocal_star(p) * reciprocal_star(q)


@given(coeff_lists, small, small)
def test_shift_composes(cs, a, b):
    p = Polynomial(cs)
    assert p.shift(a).shift(b) == p.shift(a + b)


@given(coeff_lists, small)
def test_shift_matches_evaluation(cs, c):
    p = Polynomial(cs)
    for x in (Fraction(0), Fraction(3, 7), Fraction(-2)):
        assert p.shift(c)(x) == p(x + c)


@given(coeff_lists, coeff_lists, small)
def test_ring_laws_at_a_point(a, b, x):
    p, q = Polynomial(a), Polynomial(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert p.compose(q)(x) == p(q(x))


@given(coeff_lists)
def test_antiderivative_inverts_derivative(cs):
    p = Polynomial(cs)
    assert p.antiderivative().derivative() == p


@given(st.integers(0, 30))
def test_binomial_power_is_palindromic(c):
    assert palindrome_class(Polynomial.binomial_power(c)) == PalindromeClass.PALINDROMIC


@given(coeff_lists, st.integers(0, 6), st.integers(0, 12))
def test_series_agrees_with_polynomial_for_nonnegative_c(cs, c, order):
    p = Polynomial(cs)
    exact = series_from_poly_times_binomial_power(p, c)
    series = TruncatedSeries.from_polynomial(p, order) * TruncatedSeries.from_polynomial(
        Polynomial.binomial_power(c), order
    )
    assert series == TruncatedSeries.from_polynomial(exact, order)


@given(coeff_lists, st.integers(1, 6), st.integers(0, 10))
def test_negative_power_series_inverts_positive(cs, c, order):
    p = Polynomial(cs)
    s = series_from_poly_times_binomial_power(p, -c, order)
    back = s * Polynomial.binomial_power(c)
    assert back == TruncatedSeries.from_polynomial(p, order)


def test_polynomial_json_round_trip():
    p = P(Fraction(-1, 3), 0, 5, index=4)
    q = Polynomial.from_json(p.to_json())
    assert q == p and q.index == 4


def test_laurent_basics():
    L = LaurentPolynomial({-1: 1, 0: Fraction(-1, 2)})
    assert L(2) == 0
    assert L.derivative() == LaurentPolynomial({-2: -1})
    assert (L * LaurentPolynomial({1: 1})).to_polynomial() == P(1, Fraction(-1, 2))
    assert LaurentPolynomial.from_json(L.to_json()) == L
    with pytest.raises(ZeroDivisionError):
        L(0)


@given(coeff_lists, small)
def test_at_reciprocal_evaluates_at_inverse(cs, x):
    if x == 0:
        return
    p = Polynomial(cs)
    assert p.at_reciprocal()(x) == p(1 / x)


@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), small, max_size=8), small, small)
def test_bivariate_substitution_matches_evaluation(terms, xv, yv):
    B = BivariatePolynomial(terms)
    x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
    swapped = B.substitute(x + y, -y)
    assert swapped(xv, yv) == B(xv + yv, -yv)
    assert B.specialize_y(yv)(xv) == B(xv, yv)
    assert B.specialize_x(xv)(yv) == B(xv, yv)
