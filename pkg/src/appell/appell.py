"""Appell, reciprocal and generalized reciprocal polynomials of a family."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact_arith import binomial, falling_factorial, lah
from .family import AppellFamily
from .poly import (
    LaurentPolynomial,
    PalindromeClass,
    Polynomial,
    palindrome_class,
    reciprocal_star,
    series_from_poly_times_binomial_power,
)
from .report import Report

__all__ = [
    "ReflectionRequired",
    "IdentityError",
    "SigmaTable",
    "appell_poly",
    "reciprocal_appell",
    "generalized_reciprocal",
    "ag_derivative",
    "ag_derivative_at_one",
    "ar_derivative_at_one",
    "ar_derivative_expansion",
    "as_poly",
    "sigma",
    "as_nk",
    "as_nk_coefficient",
    "check_reflection",
    "check_appell_properties",
    "check_reciprocal_theorems",
    "random_rational",
]


class ReflectionRequired(ValueError):
    """Raised when an operation needs a family that asserts the reflection relation."""


class IdentityError(ArithmeticError):
    """Two independent computations of the same object disagree."""


def _require_reflection(F: AppellFamily, what: str) -> None:
    if not F.asserts_reflection:
        raise ReflectionRequired(f"{what} needs the reflection relation; family {F.name!r} does not assert it")


def appell_poly(F: AppellFamily, n: int) -> Polynomial:
    """A_n(x) = sum_v C(n, v) alpha_{n-v} x^v."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Polynomial([comb(n, v) * F.alpha(n - v) for v in range(n + 1)], n)


def reciprocal_appell(F: AppellFamily, n: int) -> Polynomial:
    """A_R,n(x) = sum_v C(n, v) alpha_v x^v."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Polynomial([comb(n, v) * F.alpha(v) for v in range(n + 1)], n)


def generalized_reciprocal(F: AppellFamily, n: int, k: int) -> LaurentPolynomial:
    """A_G,n,k(x) = x^(k-n) A_R,n(x); negative exponents appear when k < n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return LaurentPolynomial({v + k - n: comb(n, v) * F.alpha(v) for v in range(n + 1)})


def _check_ell(n: int, k: int, ell: int) -> None:
    if ell < 0 or ell > min(n, k):
        raise ValueError(f"derivative order {ell} must satisfy 0 <= ell <= min(n, k) = {min(n, k)}")


def ag_derivative(F: AppellFamily, n: int, k: int, ell: int) -> LaurentPolynomial:
    """ell-th derivative of A_G,n,k as a combination of lower A_G terms."""
    _check_ell(n, k, ell)
    acc = LaurentPolynomial()
    for v in range(ell + 1):
        c = (-1) ** v * binomial(k - v, k - ell) * comb(n, v)
        if c:
            acc = acc + generalized_reciprocal(F, n - v, k - ell - v) * c
    return acc * factorial(ell)


def ag_derivative_at_one(F: AppellFamily, n: int, k: int, ell: int, verify: bool = False) -> Fraction:
    """A_G,n,k^(ell)(1) under the reflection relation, from the alpha_j alone."""
    _require_reflection(F, "ag_derivative_at_one")
    _check_ell(n, k, ell)
    if verify:
        _verify_reflection_at(F, n)
    s = sum(
        (binomial(k - v, k - ell) * comb(n, v) * F.alpha(n - v) for v in range(ell + 1)),
        Fraction(0),
    )
    return (-1) ** n * factorial(ell) * s


def ar_derivative_at_one(F: AppellFamily, n: int, ell: int, verify: bool = False) -> Fraction:
    return ag_derivative_at_one(F, n, n, ell, verify=verify)


def ar_derivative_expansion(F: AppellFamily, n: int, ell: int) -> Polynomial:
    """sum_v (-1)^v C(n-v, n-ell) C(n, v) A_R,n-v(x), which equals x^ell A_R,n^(ell)(x) / ell!."""
    _check_ell(n, n, ell)
    acc = Polynomial([], n)
    for v in range(ell + 1):
        acc = acc + reciprocal_appell(F, n - v) * ((-1) ** v * comb(n - v, n - ell) * comb(n, v))
    return acc.with_index(n)


@dataclass(frozen=True)
class SigmaTable:
    n: int
    sigma: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.sigma[k]


def sigma(F: AppellFamily, n: int) -> SigmaTable:
    """sigma_{n,k} = sum_{v=k}^{n} C(n, v) C(v, k) alpha_v."""
    alphas = F.alphas(n)
    return SigmaTable(
        n,
        tuple(
            sum((comb(n, v) * comb(v, k) * alphas[v] for v in range(k, n + 1)), Fraction(0))
            for k in range(n + 1)
        ),
    )


def as_poly(F: AppellFamily, n: int) -> tuple[Polynomial, SigmaTable]:
    """A_S,n(x) with its coefficient table; computed by the sum and by A_R,n(x+1)."""
    table = sigma(F, n)
    shifted = reciprocal_appell(F, n).shift(1)
    direct = Polynomial(table.sigma, n)
    if direct != shifted:
        raise IdentityError(f"A_S,{n}: coefficient sum disagrees with A_R,{n}(x+1)")
    return direct, table


def as_nk(F: AppellFamily, n: int, k: int, order: int | None = None):
    """A_S,n,k(x) = A_S,n(x) (x+1)^(k-n); a TruncatedSeries when k < n."""
    if k < n and order is None:
        raise ValueError(f"A_S,{n},{k} is a power series (k < n); pass a truncation order")
    P, _ = as_poly(F, n)
    return series_from_poly_times_binomial_power(P, k - n, order)


def as_nk_coefficient(F: AppellFamily, n: int, k: int, ell: int) -> Fraction:
    """[x^ell] A_S,n,k, cross-checked three ways."""
    _check_ell(n, k, ell)
    S = as_nk(F, n, k, order=ell)
    from_series = S.coeff(ell)
    from_derivative = ag_derivative(F, n, k, ell)(1) / factorial(ell)
    table = sigma(F, n)
    from_sigma = sum(
        (binomial(k - n, ell - v) * table[v] for v in range(ell + 1)), Fraction(0)
    )
    if not from_series == from_derivative == from_sigma:
        raise IdentityError(
            f"[x^{ell}] A_S,{n},{k}: series {from_series}, derivative {from_derivative}, sigma sum {from_sigma}"
        )
    return from_series


def _verify_reflection_at(F: AppellFamily, n: int) -> None:
    A = appell_poly(F, n)
    if A.compose(Polynomial([1, -1])) != A * (-1) ** n:
        raise ReflectionRequired(f"family {F.name!r} violates A_n(1-x) = (-1)^n A_n(x) at n = {n}")


def check_reflection(F: AppellFamily, N: int) -> Report:
    """Check (R), its consequences and their truncated equivalence for n <= N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    rep = Report(f"reflection[{F.name}]")
    one_minus_x = Polynomial([1, -1])
    r_all = r2_all = r3_all = True
    for n in range(N + 1):
        A = appell_poly(F, n)
        AR = reciprocal_appell(F, n)
        sign = (-1) ** n
        a_n = F.alpha(n)
        p = f"n={n}"
        r_all &= rep.add("R", p, A.compose(one_minus_x) == A * sign)
        r2_all &= rep.add("R2", p, A(1) == sign * a_n, f"A_n(1)={A(1)}")
        rep.add("R5.AR(1)", p, AR(1) == sign * a_n, f"A_R,n(1)={AR(1)}")
        if n % 2:
            half = A(Fraction(1, 2))
            r3_all &= rep.add("R3", p, half == 0, f"A_n(1/2)={half}")
            rep.add("R5.AR(2)", p, AR(2) == 0, f"A_R,n(2)={AR(2)}")
    a0, a1 = F.alpha(0), F.alpha(1)
    rep.add("R4", "n=1", a1 == -a0 / 2, f"alpha_1={a1}, alpha_0={a0}")
    rep.add(
        "R-equivalence",
        f"N={N}",
        r_all == r2_all == r3_all,
        f"R={r_all}, R2={r2_all}, R3={r3_all}",
    )
    return rep


def random_rational(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def check_appell_properties(F: AppellFamily, N: int, rng: random.Random, samples: int = 20) -> Report:
    """Derivative, translation, Lah-composite and star identities for n <= N."""
    rep = Report(f"appell[{F.name}]")
    polys = [appell_poly(F, n) for n in range(N + 1)]
    for n in range(N + 1):
        A = polys[n]
        p = f"n={n}"
        for v in range(1, n + 1):
            rep.add(
                "ap-deriv",
                f"n={n},v={v}",
                A.derivative(v) == polys[n - v] * falling_factorial(n, v),
            )
        ok = True
        for _ in range(samples):
            y = random_rational(rng)
            rhs = sum((polys[n - v] * (comb(n, v) * y**v) for v in range(n + 1)), Polynomial())
            ok &= A.shift(y) == rhs
        rep.add("ap-trans", p, ok, f"{samples} random y")
        AR = reciprocal_appell(F, n)
        rep.add("AR-star", p, AR == reciprocal_star(A))
        rep.add("AR(-1)", p, AR(-1) == (-1) ** n * A(-1))
        rep.add("AR(0)", p, AR(0) == F.alpha(0))
        rep.add("AR(1)", p, AR(1) == A(1))
    for n in range(1, min(N, 10) + 1):
        base = polys[n].at_reciprocal()
        for ell in range(1, n + 1):
            rhs = LaurentPolynomial()
            for v in range(1, ell + 1):
                rhs = rhs + polys[n - v].at_reciprocal().times_power(-(ell + v)) * (
                    lah(ell, v) * falling_factorial(n, v)
                )
            rep.add("lah-composite", f"n={n},l={ell}", base.derivative(ell) == rhs)
    return rep


def check_reciprocal_theorems(F: AppellFamily, N: int, kmax: int | None = None) -> Report:
    """Derivative theorems for A_G and A_R, and the palindromic structure of A_S."""
    rep = Report(f"reciprocal[{F.name}]")
    kmax = N if kmax is None else kmax
    reflecting = F.asserts_reflection
    for n in range(N + 1):
        for k in range(kmax + 1):
            G = generalized_reciprocal(F, n, k)
            for ell in range(min(n, k) + 1):
                p = f"n={n},k={k},l={ell}"
                D = ag_derivative(F, n, k, ell)
                rep.add("ag-deriv", p, D == G.derivative(ell))
                if reflecting:
                    rep.add("ag-deriv-1", p, D(1) == ag_derivative_at_one(F, n, k, ell))
            if k >= 1 and n >= 1:
                rhs = generalized_reciprocal(F, n, k - 1) * k - generalized_reciprocal(F, n - 1, k - 2) * n
                rep.add("ag-deriv-first", f"n={n},k={k}", G.derivative(1) == rhs)
            if reflecting:
                rep.add("ag-val-1", f"n={n},k={k}", G(1) == (-1) ** n * F.alpha(n))
        AR = reciprocal_appell(F, n)
        for ell in range(n + 1):
            p = f"n={n},l={ell}"
            lhs = AR.derivative(ell) * Polynomial.monomial(ell) * Fraction(1, factorial(ell))
            rep.add("ar-deriv", p, lhs == ar_derivative_expansion(F, n, ell))
            if reflecting:
                rep.add("ar-deriv-1", p, AR.derivative(ell)(1) == ar_derivative_at_one(F, n, ell))
        if n >= 1:
            rhs = (AR - reciprocal_appell(F, n - 1)) * n
            rep.add("ar-deriv-first", f"n={n}", AR.derivative(1) * Polynomial.x() == rhs)
        try:
            S, table = as_poly(F, n)
            rep.add("as-shift", f"n={n}", True)
        except IdentityError as exc:
            rep.add("as-shift", f"n={n}", False, str(exc))
            continue
        if reflecting:
            want = PalindromeClass.PALINDROMIC if n % 2 == 0 else PalindromeClass.ANTI_PALINDROMIC
            got = palindrome_class(S)
            # for A_S,n = 0 both classes hold; the zero polynomial reports palindromic
            fine = got == want or S.is_zero()
            rep.add("as-palin", f"n={n}", fine, got.value)
            rep.add(
                "as-sigma-sym",
                f"n={n}",
                all(table[k] == (-1) ** n * table[n - k] for k in range(n + 1)),
            )
        for k in range(n, n + 3):
            Snk = as_nk(F, n, k)
            ok = True
            for ell in range(min(n, k) + 1):
                try:
                    ok &= as_nk_coefficient(F, n, k, ell) == Snk.coeff(ell)
                except IdentityError:
                    ok = False
            rep.add("as-coeff", f"n={n},k={k}", ok)
            if reflecting:
                cls = palindrome_class(Snk)
                want = PalindromeClass.PALINDROMIC if n % 2 == 0 else PalindromeClass.ANTI_PALINDROMIC
                rep.add("as-palin-2", f"n={n},k={k}", cls == want or Snk.is_zero(), cls.value)
                if n % 2 == 1 and k % 2 == 0:
                    rep.add("as-central", f"n={n},k={k}", Snk.coeff(k // 2) == 0)
        if n >= 1:
            series = as_nk(F, n, n - 1, order=n)
            try:
                ok = all(
                    as_nk_coefficient(F, n, n - 1, ell) == series.coeff(ell) for ell in range(n)
                )
            except IdentityError:
                ok = False
            rep.add("as-coeff-series", f"n={n},k={n - 1}", ok)
    return rep

