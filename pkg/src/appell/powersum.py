"""Power sums S_n(m) = 0^n + 1^n + ... + (m-1)^n and the classical Faulhaber form."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .appell import appell_poly
from .exact_arith import as_rational, binomial
from .family import bernoulli_number, make_family
from .faulhaber import faulhaber_decompose
from .poly import Polynomial

__all__ = [
    "ClassicalFaulhaber",
    "power_sum_direct",
    "power_sum_bernoulli",
    "classical_faulhaber",
    "power_sum_faulhaber",
    "POWER_SUM_ROUTES",
]

POWER_SUM_ROUTES = ("direct", "bernoulli", "faulhaber")

_BERNOULLI = make_family("bernoulli")


@dataclass(frozen=True)
class ClassicalFaulhaber:
    """FF_n(y) = sum_k coeffs[k] y^k for odd n, with S_n(m) = FF_n(binomial(m, 2))."""

    n: int
    coeffs: tuple[Fraction, ...]

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    def __call__(self, y) -> Fraction:
        return self.as_polynomial()(as_rational(y))


def _check_nm(n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise ValueError("power sums need n, m >= 0")


def power_sum_direct(n: int, m: int) -> Fraction:
    _check_nm(n, m)
    # range(m) starts at 0 and Python gives 0**0 == 1
    return Fraction(sum(v**n for v in range(m)))


def power_sum_bernoulli(n: int, m: int) -> Fraction:
    """(B_{n+1}(m) - B_{n+1}) / (n+1)."""
    _check_nm(n, m)
    B = appell_poly(_BERNOULLI, n + 1)
    return (B(m) - bernoulli_number(n + 1)) / (n + 1)


def _require_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(
            f"the classical Faulhaber form is only provided for odd n >= 1 (got n={n}); "
            "even n needs an extra factor and is not supported"
        )


@lru_cache(maxsize=None)
def classical_faulhaber(n: int) -> ClassicalFaulhaber:
    """Integrate F_n(u) of the Bernoulli family from 0 to 2y."""
    _require_odd(n)
    FP = faulhaber_decompose(_BERNOULLI, n, "subst")
    coeffs = [Fraction(0)] * (FP.d + 2)
    for k in range(FP.d + 1):
        coeffs[k + 1] = FP.f(k) * 2 ** (k + 1) / (k + 1)
    return ClassicalFaulhaber(n, tuple(coeffs))


def power_sum_faulhaber(n: int, m: int) -> Fraction:
    _require_odd(n)
    _check_nm(n, m)
    return classical_faulhaber(n)(binomial(m, 2))
