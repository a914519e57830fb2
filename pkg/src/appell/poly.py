"""Polynomial types over the rationals.

:class:`Polynomial` carries an *index* ``n`` next to its coefficients. The
reciprocal (star) operator and the palindrome predicates are defined with
respect to that index, not the degree, so ``x`` at index 2 is its own
reciprocal. Equality compares coefficients only; the index is bookkeeping
for the star operator.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import kernels
from .exact_arith import as_rational, binomial, format_rational, parse_rational

__all__ = [
    "Polynomial",
    "LaurentPolynomial",
    "BivariatePolynomial",
    "TruncatedSeries",
    "PalindromeClass",
    "poly_eval",
    "poly_derivative",
    "poly_shift",
    "reciprocal_star",
    "palindrome_class",
    "series_from_poly_times_binomial_power",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _to_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _from_ints(nums: Iterable[int], den: int) -> list[Fraction]:
    return [Fraction(v, den) for v in nums]


class PalindromeClass(str, enum.Enum):
    PALINDROMIC = "palindromic"
    ANTI_PALINDROMIC = "anti-palindromic"
    QUASI_PALINDROMIC_ONLY = "quasi-palindromic-only"
    NONE = "none"


class Polynomial:
    """Dense univariate polynomial with an explicit index.

    ``coeffs[i]`` is the coefficient of ``x**i``. The index defaults to the
    length of the coefficient list minus one (0 for the zero polynomial).
    """

    __slots__ = ("_coeffs", "index")

    def __init__(self, coeffs: Iterable = (), index: int | None = None):
        cs = _trim([as_rational(c) for c in coeffs])
        if index is None:
            index = max(len(cs) - 1, 0)
        if index < 0:
            raise ValueError("polynomial index must be non-negative")
        self._coeffs = cs
        self.index = int(index)

    # construction helpers
    @classmethod
    def constant(cls, c, index: int = 0) -> "Polynomial":
        return cls([c], index)

    @classmethod
    def monomial(cls, k: int, c=1, index: int | None = None) -> "Polynomial":
        return cls([0] * k + [c], k if index is None else index)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def binomial_power(cls, c: int, shift=1) -> "Polynomial":
        """(x + shift)^c for c >= 0, index c."""
        if c < 0:
            raise ValueError("negative power is not a polynomial")
        shift = as_rational(shift)
        return cls([binomial(c, j) * shift ** (c - j) for j in range(c + 1)], c)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return _ZERO

    def padded(self, length: int | None = None) -> list[Fraction]:
        """Coefficients c_0..c_{length-1}; default length is index + 1."""
        if length is None:
            length = max(self.index + 1, len(self._coeffs))
        return [self.coeff(i) for i in range(length)]

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def with_index(self, n: int) -> "Polynomial":
        return Polynomial(self._coeffs, n)

    # arithmetic
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(
            [self.coeff(i) + other.coeff(i) for i in range(n)], max(self.index, other.index)
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs], self.index)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return Polynomial([c * a for a in self._coeffs], self.index)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial((), self.index + other.index)
        a, da = _to_ints(self._coeffs)
        b, db = _to_ints(other._coeffs)
        return Polynomial(_from_ints(kernels.convolve(a, b), da * db), self.index + other.index)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial([1], 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # analysis
    def __call__(self, x):
        if isinstance(x, Polynomial):
            return self.compose(x)
        if isinstance(x, (int, Fraction, str)):
            x = as_rational(x)
            if not self._coeffs:
                return _ZERO
            nums, den = _to_ints(self._coeffs)
            deg = len(nums) - 1
            return Fraction(kernels.horner(nums, x.numerator, x.denominator), den * x.denominator**deg)
        # generic ring element (e.g. QuadRational)
        acc = x * 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        cs = list(self._coeffs)
        for _ in range(order):
            cs = [i * cs[i] for i in range(1, len(cs))]
        return Polynomial(cs, max(self.index - order, 0))

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with zero constant term."""
        return Polynomial([_ZERO] + [c / (i + 1) for i, c in enumerate(self._coeffs)], self.index + 1)

    def shift(self, c) -> "Polynomial":
        """P(x + c), index preserved."""
        c = as_rational(c)
        if c == 0 or len(self._coeffs) < 2:
            return Polynomial(self._coeffs, self.index)
        nums, den = _to_ints(self._coeffs)
        p, q = c.numerator, c.denominator
        deg = len(nums) - 1
        # P(x + p/q) = q^-deg * T(q x) with T(z) = sum a_i q^(deg-i) (z + p)^i
        scaled = [a * q ** (deg - i) for i, a in enumerate(nums)]
        shifted = kernels.taylor_shift(scaled, p)
        qdeg = q**deg
        return Polynomial(
            [Fraction(t * q**j, den * qdeg) for j, t in enumerate(shifted)], self.index
        )

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """P(inner(x)); index is index(P) * max(index(inner), 1)."""
        acc = Polynomial([], 0)
        for c in reversed(self._coeffs):
            acc = acc * inner + Polynomial([c])
        return acc.with_index(self.index * max(inner.index, 1))

    def scale_x(self, c) -> "Polynomial":
        """P(c x)."""
        c = as_rational(c)
        return Polynomial([a * c**i for i, a in enumerate(self._coeffs)], self.index)

    def star(self) -> "Polynomial":
        return reciprocal_star(self)

    def at_reciprocal(self) -> "LaurentPolynomial":
        """The Laurent polynomial P(1/x)."""
        return LaurentPolynomial({-i: c for i, c in enumerate(self._coeffs)})

    def to_laurent(self) -> "LaurentPolynomial":
        return LaurentPolynomial({i: c for i, c in enumerate(self._coeffs)})

    def to_json(self) -> dict:
        return {"index": self.index, "coeffs": [format_rational(c) for c in self.padded()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        return cls([parse_rational(str(c)) for c in data["coeffs"]], int(data["index"]))

    def __repr__(self):
        return f"Polynomial([{', '.join(format_rational(c) for c in self.padded())}], index={self.index})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(format_rational(c) + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")


def poly_eval(P: Polynomial, x) -> Fraction:
    return P(x)


def poly_derivative(P: Polynomial, order: int) -> Polynomial:
    return P.derivative(order)


def poly_shift(P: Polynomial, c) -> Polynomial:
    return P.shift(c)


def _check_index(P: Polynomial) -> None:
    if P.degree > P.index:
        raise ValueError(
            f"polynomial has a nonzero coefficient at x^{P.degree} beyond its index {P.index}"
        )


def reciprocal_star(P: Polynomial) -> Polynomial:
    """x^n P(1/x) for the index n of ``P``."""
    _check_index(P)
    return Polynomial(reversed(P.padded(P.index + 1)), P.index)


def palindrome_class(P: Polynomial) -> PalindromeClass:
    _check_index(P)
    n = P.index
    c = P.padded(n + 1)
    pal = all(c[v] == c[n - v] for v in range(n + 1))
    if pal:
        return PalindromeClass.PALINDROMIC
    if all(c[v] == -c[n - v] for v in range(n + 1)):
        return PalindromeClass.ANTI_PALINDROMIC
    if all(abs(c[v]) == abs(c[n - v]) for v in range(n + 1)):
        return PalindromeClass.QUASI_PALINDROMIC_ONLY
    return PalindromeClass.NONE


class LaurentPolynomial:
    """Finite sum of integer powers of x (negative exponents allowed)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = as_rational(c)
            if c != 0:
                clean[int(e)] = c
        self._terms = clean

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coeff(self, e: int) -> Fraction:
        return self._terms.get(e, _ZERO)

    def min_exponent(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_exponent(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            other = other.to_laurent()
        elif isinstance(other, (int, Fraction)):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = other.to_laurent()
        elif isinstance(other, (int, Fraction)):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, _ZERO) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return LaurentPolynomial({e: c * v for e, v in self._terms.items()})
        if isinstance(other, Polynomial):
            other = other.to_laurent()
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, _ZERO) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def times_power(self, m: int) -> "LaurentPolynomial":
        """x^m times self."""
        return LaurentPolynomial({e + m: c for e, c in self._terms.items()})

    def derivative(self, order: int = 1) -> "LaurentPolynomial":
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        terms = dict(self._terms)
        for _ in range(order):
            terms = {e - 1: e * c for e, c in terms.items() if e != 0}
        return LaurentPolynomial(terms)

    def __call__(self, x):
        x = as_rational(x)
        if x == 0:
            if any(e < 0 for e in self._terms):
                raise ZeroDivisionError("Laurent polynomial has a pole at x = 0")
            return self.coeff(0)
        return sum((c * x**e for e, c in self._terms.items()), _ZERO)

    def to_polynomial(self, index: int | None = None) -> Polynomial:
        if any(e < 0 for e in self._terms):
            raise ValueError("Laurent polynomial has negative exponents")
        top = self.max_exponent()
        cs = [self.coeff(i) for i in range((top or 0) + 1)] if top is not None else []
        return Polynomial(cs, index)

    def to_json(self) -> dict:
        return {"terms": {str(e): format_rational(c) for e, c in sorted(self._terms.items())}}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPolynomial":
        return cls({int(e): parse_rational(str(c)) for e, c in data["terms"].items()})

    def __repr__(self):
        body = ", ".join(f"{e}: {format_rational(c)}" for e, c in sorted(self._terms.items()))
        return f"LaurentPolynomial({{{body}}})"


class BivariatePolynomial:
    """Sparse polynomial sum c_ij x^i y^j."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = as_rational(c)
            if c != 0:
                if i < 0 or j < 0:
                    raise ValueError("bivariate exponents must be non-negative")
                clean[(int(i), int(j))] = c
        self._terms = clean

    @classmethod
    def from_x(cls, P: Polynomial) -> "BivariatePolynomial":
        return cls({(i, 0): c for i, c in enumerate(P.coeffs)})

    @classmethod
    def from_y(cls, P: Polynomial) -> "BivariatePolynomial":
        return cls({(0, j): c for j, c in enumerate(P.coeffs)})

    @classmethod
    def constant(cls, c) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, _ZERO) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return BivariatePolynomial({k: c * v for k, v in self._terms.items()})
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, _ZERO) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = BivariatePolynomial.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x, y):
        x, y = as_rational(x), as_rational(y)
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), _ZERO)

    def substitute(self, x_image: "BivariatePolynomial", y_image: "BivariatePolynomial") -> "BivariatePolynomial":
        """Exact composition p(x_image(x, y), y_image(x, y))."""
        if not self._terms:
            return BivariatePolynomial()
        max_i = max(i for i, _ in self._terms)
        max_j = max(j for _, j in self._terms)
        xp = [BivariatePolynomial.constant(1)]
        for _ in range(max_i):
            xp.append(xp[-1] * x_image)
        yp = [BivariatePolynomial.constant(1)]
        for _ in range(max_j):
            yp.append(yp[-1] * y_image)
        acc = BivariatePolynomial()
        for (i, j), c in self._terms.items():
            acc = acc + xp[i] * yp[j] * c
        return acc

    def specialize_y(self, y) -> Polynomial:
        y = as_rational(y)
        top = max((i for i, _ in self._terms), default=-1)
        cs = [_ZERO] * (top + 1)
        for (i, j), c in self._terms.items():
            cs[i] += c * y**j
        return Polynomial(cs)

    def specialize_x(self, x) -> Polynomial:
        x = as_rational(x)
        top = max((j for _, j in self._terms), default=-1)
        cs = [_ZERO] * (top + 1)
        for (i, j), c in self._terms.items():
            cs[j] += c * x**i
        return Polynomial(cs)

    def __repr__(self):
        body = ", ".join(f"({i}, {j}): {format_rational(c)}" for (i, j), c in sorted(self._terms.items()))
        return f"BivariatePolynomial({{{body}}})"


class TruncatedSeries:
    """Power series known exactly through x^order."""

    __slots__ = ("_coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("series order must be non-negative")
        cs = [as_rational(c) for c in coeffs][: order + 1]
        cs += [_ZERO] * (order + 1 - len(cs))
        self._coeffs = tuple(cs)
        self.order = int(order)

    @classmethod
    def from_polynomial(cls, P: Polynomial, order: int) -> "TruncatedSeries":
        return cls(P.coeffs, order)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, i: int) -> Fraction:
        if i < 0:
            return _ZERO
        if i > self.order:
            raise ValueError(f"coefficient x^{i} is beyond the truncation order {self.order}")
        return self._coeffs[i]

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Polynomial):
            return TruncatedSeries.from_polynomial(other, self.order)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        raise TypeError(f"cannot combine a series with {type(other).__name__}")

    def __eq__(self, other):
        if not isinstance(other, (TruncatedSeries, Polynomial, int, Fraction)):
            return NotImplemented
        o = self._coerce(other)
        m = min(self.order, o.order)
        return self._coeffs[: m + 1] == o._coeffs[: m + 1]

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other):
        o = self._coerce(other)
        m = min(self.order, o.order)
        return TruncatedSeries([self._coeffs[i] + o._coeffs[i] for i in range(m + 1)], m)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self._coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return TruncatedSeries([c * a for a in self._coeffs], self.order)
        o = self._coerce(other)
        m = min(self.order, o.order)
        a, da = _to_ints(self._coeffs[: m + 1])
        b, db = _to_ints(o._coeffs[: m + 1])
        prod = kernels.convolve(a, b)[: m + 1]
        return TruncatedSeries(_from_ints(prod, da * db), m)

    __rmul__ = __mul__

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self._coeffs, self.order)

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self._coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"


def series_from_poly_times_binomial_power(P: Polynomial, c: int, order: int | None = None):
    """P(x) (x+1)^c: a Polynomial for c >= 0, else a TruncatedSeries to ``order``."""
    if c >= 0:
        return P * Polynomial.binomial_power(c)
    if order is None:
        raise ValueError("a truncation order is required when the exponent is negative")
    if order < 0:
        raise ValueError("series order must be non-negative")
    geometric = TruncatedSeries(kernels.binomial_row(c, order), order)
    return TruncatedSeries.from_polynomial(P, order) * geometric
