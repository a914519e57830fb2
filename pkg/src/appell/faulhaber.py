"""Faulhaber-type polynomials F_n(u) with u = x(x-1).

For a family satisfying the reflection relation, A_n(x) = (2x-1)^delta_n F_n(u)
where delta_n = n mod 2. The coefficients f_{n,k} (and h_{n,k} = k! f_{n,k})
are produced by three independent routes:

``subst``
    expansion of A_n around x = 1/2 in powers of 4u + 1 = (2x-1)^2;
``reciprocal``
    derivatives of generalized reciprocal polynomials at x = 1 (odd n) and the
    even-index table built from the odd neighbour;
``recurrence``
    the h_{n,k} triangle seeded from alpha and grown over odd n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .appell import (
    IdentityError,
    ReflectionRequired,
    ag_derivative,
    appell_poly,
    as_nk,
    as_poly,
    reciprocal_appell,
    sigma,
)
from .exact_arith import PHI, SQRT5, QuadRational, binomial, falling_factorial, fibonacci
from .family import AppellFamily, genocchi_number
from .poly import PalindromeClass, Polynomial, palindrome_class
from .report import Report
from .umbral import alpha_rs

__all__ = [
    "ROUTES",
    "FaulhaberPoly",
    "LambdaTable",
    "half_index",
    "parity",
    "half_shift_expand",
    "faulhaber_decompose",
    "faulhaber_all_routes",
    "fp_reconstruct",
    "lambda_sum",
    "lambda_table",
    "a_nk",
    "fp_expr",
    "fp_value_identities",
    "fp_main_check",
    "symmetry_cascade",
    "genocchi_zero_sum",
    "fp_recurrence_check",
    "fp_deriv_lemma_check",
]

ROUTES = ("subst", "reciprocal", "recurrence")

U = Polynomial([0, -1, 1])  # u = x^2 - x
U_PRIME = Polynomial([-1, 2])  # u' = 2x - 1
FOUR_U_PLUS_1 = Polynomial([1, 4])  # 4u + 1, as a polynomial in u


def half_index(n: int) -> int:
    return n // 2


def parity(n: int) -> int:
    return n & 1


@dataclass(frozen=True)
class FaulhaberPoly:
    """F_n(u) = sum_k fp[k] u^k for k <= d_n = floor(n/2)."""

    n: int
    fp: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.fp) != half_index(self.n) + 1:
            raise ValueError(f"F_{self.n} needs {half_index(self.n) + 1} coefficients, got {len(self.fp)}")

    @property
    def delta(self) -> int:
        return parity(self.n)

    @property
    def d(self) -> int:
        return half_index(self.n)

    def f(self, k: int) -> Fraction:
        """f_{n,k}; zero beyond d_n."""
        return self.fp[k] if 0 <= k < len(self.fp) else Fraction(0)

    def h(self, k: int) -> Fraction:
        return factorial(k) * self.f(k)

    @property
    def fh(self) -> tuple[Fraction, ...]:
        return tuple(self.h(k) for k in range(len(self.fp)))

    def as_polynomial(self) -> Polynomial:
        """F_n as a polynomial in u."""
        return Polynomial(self.fp, self.d)

    def __call__(self, u):
        return self.as_polynomial()(u)


def _require(F: AppellFamily, n: int) -> None:
    """Reflection must be asserted and hold at n (which implies it for all m <= n)."""
    if not F.asserts_reflection:
        raise ReflectionRequired(f"family {F.name!r} does not assert the reflection relation")
    A = appell_poly(F, n)
    if A.compose(Polynomial([1, -1])) != A * (-1) ** n:
        bad = next(m for m in range(n + 1) if appell_poly(F, m)(1) != (-1) ** m * F.alpha(m))
        raise ReflectionRequired(
            f"family {F.name!r} violates A_n(1-x) = (-1)^n A_n(x) at n = {n}: "
            f"A_{bad}(1) != (-1)^{bad} alpha_{bad}"
        )


def half_shift_expand(F: AppellFamily, n: int) -> list[Fraction]:
    """A_S,2v(1) for 0 <= v <= d_n, checking both half-point expansions of A_n."""
    _require(F, n)
    d = half_index(n)
    values = []
    for v in range(d + 1):
        m = 2 * v
        s_val = as_poly(F, m)[0](1)
        r_val = reciprocal_appell(F, m)(2)
        h_val = 2**m * appell_poly(F, m)(Fraction(1, 2))
        if not s_val == r_val == h_val:
            raise IdentityError(f"A_S,{m}(1)={s_val}, A_R,{m}(2)={r_val}, 2^{m} A_{m}(1/2)={h_val}")
        values.append(s_val)
    A = appell_poly(F, n)
    x_minus_half = Polynomial([Fraction(-1, 2), 1])
    around_half = Polynomial()
    for v in range(0, n + 1, 2):
        around_half = around_half + x_minus_half ** (n - v) * (
            comb(n, v) * appell_poly(F, v)(Fraction(1, 2))
        )
    quad = U_PRIME * U_PRIME  # (u')^2 = 4u + 1 in x
    in_4u1 = Polynomial()
    for v in range(d + 1):
        in_4u1 = in_4u1 + quad ** (d - v) * (comb(n, 2 * v) * values[v])
    in_4u1 = in_4u1 * U_PRIME ** parity(n) * Fraction(1, 2**n)
    if around_half != A:
        raise IdentityError(f"half-point expansion of A_{n} does not reproduce A_{n}")
    if in_4u1 != A:
        raise IdentityError(f"(4u+1)-expansion of A_{n} does not reproduce A_{n}")
    return values


def _route_subst(F: AppellFamily, n: int) -> FaulhaberPoly:
    d = half_index(n)
    s_vals = half_shift_expand(F, n)
    fp = []
    for k in range(d + 1):
        acc = sum(
            (comb(n, 2 * v) * comb(d - v, k) * s_vals[v] for v in range(d - k + 1)),
            Fraction(0),
        )
        fp.append(acc * Fraction(2) ** (2 * k - n))
    return FaulhaberPoly(n, tuple(fp))


def _odd_reciprocal(F: AppellFamily, n: int) -> tuple[Fraction, ...]:
    # f_{n,k} = (-1)^k A_G,n,2k^(k)(1) / k!, derivative expanded symbolically
    return tuple(
        (-1) ** k * ag_derivative(F, n, 2 * k, k)(1) / factorial(k) for k in range(half_index(n) + 1)
    )


def _route_reciprocal(F: AppellFamily, n: int) -> FaulhaberPoly:
    if n % 2:
        return FaulhaberPoly(n, _odd_reciprocal(F, n))
    d = half_index(n)
    if d == 0:
        return FaulhaberPoly(n, (F.alpha(n),))
    prev = _odd_reciprocal(F, n - 1)
    fp = [F.alpha(n)]
    for k in range(1, d):
        fp.append(Fraction(n, k) * prev[k - 1])
    fp.append(F.alpha(0))
    return FaulhaberPoly(n, tuple(fp))


def _h_triangle(F: AppellFamily, n: int) -> dict[int, list[Fraction]]:
    """h_{m,k} for all odd m <= n (plus m = n - 1 when needed by even n)."""
    rows: dict[int, list[Fraction]] = {}
    top = n if n % 2 else n - 1
    for m in range(1, top + 1, 2):
        d = half_index(m)
        row = [(-1) ** m * F.alpha(m)]
        if d >= 1:
            row.append((-1) ** (m + 1) * (2 * F.alpha(m) + m * F.alpha(m - 1)))
        lower = rows.get(m - 2, [])
        for k in range(0, d - 1):
            row.append(-(4 * k + 6) * row[k + 1] + falling_factorial(m, 2) * lower[k])
        rows[m] = row
    return rows


def _route_recurrence(F: AppellFamily, n: int) -> FaulhaberPoly:
    d = half_index(n)
    if n % 2:
        h = _h_triangle(F, n)[n]
    elif n == 0:
        h = [F.alpha(0)]
    else:
        odd = _h_triangle(F, n - 1)[n - 1]
        # h_{n,0} = alpha_n and h_{n,k+1} = n h_{n-1,k}
        h = [F.alpha(n)] + [n * odd[k] for k in range(d)]
    return FaulhaberPoly(n, tuple(Fraction(h[k]) / factorial(k) for k in range(d + 1)))


_ROUTE_FUNCS = {
    "subst": _route_subst,
    "reciprocal": _route_reciprocal,
    "recurrence": _route_recurrence,
}


def faulhaber_decompose(F: AppellFamily, n: int, route: str = "subst") -> FaulhaberPoly:
    """Coefficients of F_n(u) by one route; needs the reflection relation at n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    try:
        func = _ROUTE_FUNCS[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}") from None
    _require(F, n)
    return func(F, n)


def faulhaber_all_routes(F: AppellFamily, n: int) -> tuple[FaulhaberPoly, bool]:
    """Run every route; returns the subst result and whether all routes agree."""
    results = [faulhaber_decompose(F, n, r) for r in ROUTES]
    return results[0], all(r == results[0] for r in results[1:])


def fp_reconstruct(FP: FaulhaberPoly) -> Polynomial:
    """(2x-1)^delta_n F_n(x^2 - x) as a polynomial in x with index n."""
    P = FP.as_polynomial().compose(U)
    if FP.delta:
        P = P * U_PRIME
    return P.with_index(FP.n)


def lambda_sum(F: AppellFamily, n: int, k: int) -> Fraction:
    """Lambda_{n,k}(alpha) = sum_{v<=k} C(n, v) (2k-v)_k alpha_{n-v}."""
    if not 0 <= k <= n:
        raise ValueError(f"Lambda_{{{n},{k}}} needs n >= k >= 0")
    return sum(
        (comb(n, v) * falling_factorial(2 * k - v, k) * F.alpha(n - v) for v in range(k + 1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class LambdaTable:
    """Lambda_{m,k}(alpha) for 0 <= k <= m <= n."""

    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        m, k = key
        return self.rows[m][k]

    def a(self, m: int, k: int) -> Fraction:
        """a_{m,k} = (-1)^m Lambda_{m,k}(alpha)."""
        return (-1) ** m * self.rows[m][k]

    def recurrence_holds(self) -> bool:
        return all(
            falling_factorial(m, 2) * self[m - 2, k] == self[m, k + 2] - (4 * k + 6) * self[m, k + 1]
            for m in range(2, self.n + 1)
            for k in range(m - 1)
        )


def lambda_table(F: AppellFamily, n: int) -> LambdaTable:
    return LambdaTable(n, tuple(tuple(lambda_sum(F, m, k) for k in range(m + 1)) for m in range(n + 1)))


def a_nk(F: AppellFamily, n: int, k: int) -> Fraction:
    """a_{n,k} = A_G,n,2k^(k)(1), cross-checked against the derivative and Lambda."""
    if not F.asserts_reflection:
        raise ReflectionRequired(f"a_nk needs the reflection relation; family {F.name!r} does not assert it")
    if not 0 <= k <= n:
        raise ValueError(f"a_{{{n},{k}}} needs n >= k >= 0")
    closed = (-1) ** n * factorial(k) * sum(
        (binomial(2 * k - v, k) * comb(n, v) * F.alpha(n - v) for v in range(k + 1)), Fraction(0)
    )
    symbolic = ag_derivative(F, n, 2 * k, k)(1)
    via_lambda = (-1) ** n * lambda_sum(F, n, k)
    if not closed == symbolic == via_lambda:
        raise IdentityError(f"a_{{{n},{k}}}: closed {closed}, derivative {symbolic}, Lambda {via_lambda}")
    return closed


def fp_expr(F: AppellFamily, n: int, k: int) -> tuple[Fraction, Fraction]:
    """Both closed forms for f_{n,k}, odd n and 0 <= k <= n (zero beyond d_n)."""
    table = sigma(F, n)
    via_sigma = (-1) ** k * sum(
        (binomial(2 * k - n, k - v) * table[v] for v in range(k + 1)), Fraction(0)
    )
    via_alpha = (-1) ** (k + 1) * sum(
        (binomial(2 * k - v, k) * comb(n, v) * F.alpha(n - v) for v in range(k + 1)), Fraction(0)
    )
    return via_sigma, via_alpha


def fp_value_identities(F: AppellFamily, n: int) -> Report:
    """A_n(phi) = sqrt5^delta F_n(1) and the umbral Fibonacci value."""
    rep = Report(f"fp-values[{F.name}]")
    FP = faulhaber_decompose(F, n, "subst")
    A = appell_poly(F, n)
    F1 = FP(1)
    lhs = A(PHI)
    rhs = QuadRational.coerce(F1) * (SQRT5 ** FP.delta)
    rep.add("fp-phi", f"n={n}", lhs == rhs, f"A_n(phi)={lhs}, rhs={rhs}")
    umbral = sum((comb(n, v) * F.alpha(n - v) * fibonacci(v) for v in range(n + 1)), Fraction(0))
    want = 2 * F1 if n % 2 else Fraction(0)
    rep.add("fp-fibonacci", f"n={n}", umbral == want, f"sum={umbral}, expected={want}")
    return rep


def fp_main_check(F: AppellFamily, n: int) -> Report:
    """(-1)^k f_{n,k} = [x^k] A_S,n,2k = A_G,n,2k^(k)(1)/k! for odd n, 0 <= k <= n."""
    if n % 2 == 0:
        raise ValueError("fp_main_check needs odd n")
    rep = Report(f"fp-main[{F.name}]")
    FP = faulhaber_decompose(F, n, "subst")
    for k in range(n + 1):
        p = f"n={n},k={k}"
        target = (-1) ** k * FP.f(k)
        series = as_nk(F, n, 2 * k, order=k)
        deriv = ag_derivative(F, n, 2 * k, k)(1) / factorial(k)
        rep.add("fp-main", p, series.coeff(k) == target == deriv, f"target={target}")
        e1, e2 = fp_expr(F, n, k)
        rep.add("fp-expr", p, e1 == FP.f(k) == e2, f"sigma form={e1}, alpha form={e2}")
    return rep


def symmetry_cascade(F: AppellFamily, n: int, k: int) -> Report:
    """Chain of vanishing statements for odd n and (n+1)/2 <= k <= n."""
    if n % 2 == 0 or not (n + 1) // 2 <= k <= n:
        raise ValueError(f"symmetry cascade needs odd n and (n+1)/2 <= k <= n, got n={n}, k={k}")
    _require(F, n)
    rep = Report(f"cascade[{F.name}]")
    p = f"n={n},k={k}"
    S = as_nk(F, n, 2 * k)
    cls = palindrome_class(S)
    rep.add("cascade.anti-palindromic", p, cls == PalindromeClass.ANTI_PALINDROMIC or S.is_zero(), cls.value)
    rep.add("cascade.central", p, S.coeff(k) == 0)
    rep.add("cascade.ag-derivative", p, ag_derivative(F, n, 2 * k, k)(1) == 0)
    e1, e2 = fp_expr(F, n, k)
    rep.add("cascade.f-zero", p, e1 == 0 and e2 == 0)
    table = sigma(F, n)
    z1 = sum((binomial(2 * k - n, k - v) * table[v] for v in range(k + 1)), Fraction(0))
    z2 = sum(
        (binomial(2 * k - n, k - v) * comb(n, v) * alpha_rs(F, n - v, v) for v in range(k + 1)),
        Fraction(0),
    )
    z3 = sum((binomial(2 * k - v, k) * comb(n, v) * F.alpha(n - v) for v in range(k + 1)), Fraction(0))
    rep.add("recur.sigma", p, z1 == 0, str(z1))
    rep.add("recur.alpha-rs", p, z2 == 0, str(z2))
    rep.add("recur.alpha", p, z3 == 0, str(z3))
    return rep


def genocchi_zero_sum(n: int, k: int) -> Fraction:
    """sum_v C(2k-v, k) C(n, v) G_{n+1-v}/(n+1-v); zero for odd n, (n+1)/2 <= k <= n."""
    return sum(
        (
            binomial(2 * k - v, k) * comb(n, v) * genocchi_number(n + 1 - v) / (n + 1 - v)
            for v in range(k + 1)
        ),
        Fraction(0),
    )


def fp_recurrence_check(F: AppellFamily, n: int) -> Report:
    """Derivative recurrences between F_n, F_{n-1}, F_{n-2} and their h-coefficient forms."""
    if n < 2:
        raise ValueError("fp_recurrence_check needs n >= 2")
    rep = Report(f"fp-recur[{F.name}]")
    polys = [faulhaber_decompose(F, m, "subst") for m in range(n + 1)]
    Fn = polys[n].as_polynomial()
    F1 = polys[n - 1].as_polynomial()
    F2 = polys[n - 2].as_polynomial()
    D1, D2 = Fn.derivative(1), Fn.derivative(2)
    p = f"n={n}"
    if n % 2 == 0:
        rep.add("fp-recur.1", p, F1 * n == D1)
        rep.add("fp-recur.2", p, F2 * falling_factorial(n, 2) == D1 * 2 + FOUR_U_PLUS_1 * D2)
    else:
        rep.add("fp-recur.1", p, F1 * n == Fn * 2 + FOUR_U_PLUS_1 * D1)
        rep.add("fp-recur.2", p, F2 * falling_factorial(n, 2) == D1 * 6 + FOUR_U_PLUS_1 * D2)

    def h(m: int, k: int) -> Fraction:
        return polys[m].h(k)

    ok1 = True
    for k in range(half_index(n - 1) + 1):
        if n % 2 == 0:
            ok1 &= n * h(n - 1, k) == h(n, k + 1)
        else:
            ok1 &= n * h(n - 1, k) == (4 * k + 2) * h(n, k) + h(n, k + 1)
    rep.add("fh-recur.1", p, ok1)
    ok2 = True
    c = 2 if n % 2 == 0 else 6
    for k in range(half_index(n - 2) + 1):
        ok2 &= falling_factorial(n, 2) * h(n - 2, k) == (4 * k + c) * h(n, k + 1) + h(n, k + 2)
    rep.add("fh-recur.2", p, ok2)
    rep.extend(fp_deriv_lemma_check(polys[n]))
    return rep


def fp_deriv_lemma_check(FP: FaulhaberPoly) -> Report:
    """Chain-rule identities for F(u) and u' F(u), expanded in x."""
    rep = Report("fp-deriv")
    P = FP.as_polynomial()
    Fu = P.compose(U)
    D1u = P.derivative(1).compose(U)
    D2u = P.derivative(2).compose(U)
    quad = FOUR_U_PLUS_1.compose(U)
    g = U_PRIME * Fu
    p = f"n={FP.n}"
    rep.add("fp-deriv.1", p, Fu.derivative(1) == U_PRIME * D1u)
    rep.add("fp-deriv.2", p, Fu.derivative(2) == D1u * 2 + quad * D2u)
    rep.add("fp-deriv.3", p, g.derivative(1) == Fu * 2 + quad * D1u)
    rep.add("fp-deriv.4", p, g.derivative(2) == U_PRIME * (D1u * 6 + quad * D2u))
    return rep
