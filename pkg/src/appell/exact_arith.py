"""Exact scalars and the combinatorial numbers used throughout the package.

``Rational`` is :class:`fractions.Fraction`, which already keeps a positive
denominator and lowest terms after every operation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

Rational = Fraction

__all__ = [
    "Rational",
    "QuadRational",
    "PHI",
    "SQRT5",
    "binomial",
    "falling_factorial",
    "lah",
    "fibonacci",
    "fibonacci_closed_form",
    "parse_rational",
    "format_rational",
    "as_rational",
]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected an exact rational, got {value!r}")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; floats are rejected."""
    s = text.strip().replace("−", "-")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def binomial(m: int, j: int) -> int:
    """Generalized binomial coefficient m(m-1)...(m-j+1)/j!.

    The upper index may be negative; ``binomial(m, j) == 0`` for ``j < 0``.
    """
    if j < 0:
        return 0
    if m >= 0:
        return comb(m, j)
    # binomial(-a, j) = (-1)^j binomial(a + j - 1, j)
    value = comb(j - m - 1, j)
    return -value if j & 1 else value


def falling_factorial(n: int, k: int) -> int:
    if k < 0:
        raise ValueError("falling factorial needs k >= 0")
    out = 1
    for i in range(k):
        out *= n - i
    return out


def lah(n: int, k: int) -> int:
    """Signed Lah number (-1)^n n!/k! C(n-1, k-1)."""
    if k < 1 or n < k:
        raise ValueError(f"lah({n}, {k}) requires n >= k >= 1")
    value = factorial(n) // factorial(k) * comb(n - 1, k - 1)
    return -value if n & 1 else value


def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("fibonacci index must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class QuadRational:
    """Element a + b*sqrt(5) of Q(sqrt 5)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    @classmethod
    def coerce(cls, value) -> "QuadRational":
        if isinstance(value, QuadRational):
            return value
        return cls(as_rational(value), Fraction(0))

    def __add__(self, other):
        o = QuadRational.coerce(other)
        return QuadRational(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadRational(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-QuadRational.coerce(other))

    def __rsub__(self, other):
        return QuadRational.coerce(other) - self

    def __mul__(self, other):
        o = QuadRational.coerce(other)
        return QuadRational(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = QuadRational(Fraction(1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadRational.coerce(other)
        if not isinstance(other, QuadRational):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def rational_part(self) -> Fraction:
        return self.a

    def sqrt5_part(self) -> Fraction:
        return self.b

    def __repr__(self):
        return f"QuadRational({format_rational(self.a)}, {format_rational(self.b)})"


SQRT5 = QuadRational(0, 1)
PHI = QuadRational(Fraction(1, 2), Fraction(1, 2))


def fibonacci_closed_form(n: int) -> int:
    """F_n read off as the sqrt(5)-component of phi^n - (1 - phi)^n."""
    diff = PHI**n - (1 - PHI) ** n
    if diff.a != 0 or diff.b.denominator != 1:
        raise ArithmeticError(f"closed form for F_{n} is not an integer multiple of sqrt(5)")
    return diff.b.numerator
