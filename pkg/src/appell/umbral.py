"""Rank/shift polynomials A_{r,s}, the numbers alpha_{r,s} and their reciprocities.

Umbral powers are evaluated by linearity, A(x)^m -> A_m(x), so every
identity here is a finite binomial sum over Appell polynomials.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import comb

from .appell import appell_poly, as_poly, random_rational
from .family import AppellFamily
from .poly import BivariatePolynomial, Polynomial
from .report import Report

__all__ = [
    "ap_rs",
    "alpha_rs",
    "ap_rs_bivariate",
    "Substitution",
    "check_umbral_reciprocity",
    "as_umbral_crosscheck",
]


def ap_rs(F: AppellFamily, r: int, s: int) -> Polynomial:
    """(A(x)+1)^r A(x)^s = sum_v C(r, v) A_{s+v}(x), index r+s."""
    if r < 0 or s < 0:
        raise ValueError("rank and shift must be non-negative")
    acc = Polynomial([], r + s)
    for v in range(r + 1):
        acc = acc + appell_poly(F, s + v) * comb(r, v)
    return acc.with_index(r + s)


def alpha_rs(F: AppellFamily, r: int, s: int) -> Fraction:
    """(alpha+1)^r alpha^s = sum_v C(r, v) alpha_{s+v}."""
    if r < 0 or s < 0:
        raise ValueError("rank and shift must be non-negative")
    return sum((comb(r, v) * F.alpha(s + v) for v in range(r + 1)), Fraction(0))


def ap_rs_bivariate(F: AppellFamily, r: int, s: int) -> BivariatePolynomial:
    """(A(x)+y)^r A(x)^s = sum_j C(r, j) y^(r-j) A_{s+j}(x)."""
    if r < 0 or s < 0:
        raise ValueError("rank and shift must be non-negative")
    terms: dict[tuple[int, int], Fraction] = {}
    for j in range(r + 1):
        c = comb(r, j)
        for i, a in enumerate(appell_poly(F, s + j).coeffs):
            key = (i, r - j)
            terms[key] = terms.get(key, Fraction(0)) + c * a
    return BivariatePolynomial(terms)


class _RankShiftCache(dict):
    def __init__(self, F: AppellFamily):
        super().__init__()
        self.F = F

    def __missing__(self, key: tuple[int, int]) -> Polynomial:
        value = self[key] = ap_rs(self.F, *key)
        return value


class Substitution:
    """Composition (x, y) -> (x_image, y_image) with cached image powers."""

    def __init__(self, x_image: BivariatePolynomial, y_image: BivariatePolynomial):
        self.x_image = x_image
        self.y_image = y_image
        self._xp = [BivariatePolynomial.constant(1)]
        self._yp = [BivariatePolynomial.constant(1)]

    @staticmethod
    def _grow(pows: list, image: BivariatePolynomial, e: int) -> BivariatePolynomial:
        while len(pows) <= e:
            pows.append(pows[-1] * image)
        return pows[e]

    def __call__(self, p: BivariatePolynomial) -> BivariatePolynomial:
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in p.terms.items():
            prod = self._grow(self._xp, self.x_image, i) * self._grow(self._yp, self.y_image, j)
            for key, v in prod.terms.items():
                acc[key] = acc.get(key, Fraction(0)) + c * v
        return BivariatePolynomial(acc)


def check_umbral_reciprocity(
    F: AppellFamily,
    rmax: int,
    bivariate: bool = True,
    rng: random.Random | None = None,
    samples: int = 3,
    ladder_max: int | None = None,
) -> Report:
    """Reciprocity, recurrence and ladder identities for r, s <= rmax.

    Identities that assume the reflection relation (ap-recip, ac-recip,
    ap-biv-2) are only checked for families asserting it. The ladder
    identities run for r, s, n <= ladder_max (default min(rmax, 6)).
    """
    rng = rng or random.Random(0)
    rep = Report(f"umbral[{F.name}]")
    reflecting = F.asserts_reflection
    polys = _RankShiftCache(F)
    neg_x = Polynomial([0, -1])
    for r in range(rmax + 1):
        for s in range(rmax + 1):
            p = f"r={r},s={s}"
            P = polys[r, s]
            rep.add("ap-rs-recurrence", p, polys[r + 1, s] == P + polys[r, s + 1])
            rep.add("alpha-rs-at-0", p, P(0) == alpha_rs(F, r, s))
            if reflecting:
                lhs = P * (-1) ** r
                rhs = polys[s, r].compose(neg_x) * (-1) ** s
                rep.add("ap-recip", p, lhs == rhs)
                rep.add(
                    "ac-recip",
                    p,
                    (-1) ** r * alpha_rs(F, r, s) == (-1) ** s * alpha_rs(F, s, r),
                )
    if ladder_max is None:
        ladder_max = min(rmax, 6)
    for r in range(ladder_max + 1):
        for s in range(ladder_max + 1):
            for n in range(ladder_max + 1):
                p = f"r={r},s={s},n={n}"
                up = sum((polys[r, s + v] * comb(n, v) for v in range(n + 1)), Polynomial())
                rep.add("ladder-rank", p, polys[r + n, s] == up)
                down = sum(
                    (polys[r + v, s] * (comb(n, v) * (-1) ** (n - v)) for v in range(n + 1)),
                    Polynomial(),
                )
                rep.add("ladder-shift", p, polys[r, s + n] == down)
    if bivariate:
        x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
        swap = Substitution(x + y, -y)
        mirror = Substitution(1 - x - y, y)
        biv = {
            (r, s): ap_rs_bivariate(F, r, s) for r in range(rmax + 1) for s in range(rmax + 1)
        }
        for r in range(rmax + 1):
            for s in range(rmax + 1):
                p = f"r={r},s={s}"
                B = biv[r, s]
                rep.add("ap-rs-biv-y1", p, B.specialize_y(1) == polys[r, s])
                rep.add("ap-rs-biv-y0", p, B.specialize_y(0) == appell_poly(F, r + s))
                rhs = swap(biv[s, r])
                ok = B == rhs
                for _ in range(samples):
                    xv, yv = random_rational(rng), random_rational(rng)
                    ok &= B(xv, yv) == biv[s, r](xv + yv, -yv)
                rep.add("ap-biv-1", p, ok)
                if reflecting:
                    rhs2 = mirror(biv[s, r]) * (-1) ** s
                    ok2 = B * (-1) ** r == rhs2
                    for _ in range(samples):
                        xv, yv = random_rational(rng), random_rational(rng)
                        ok2 &= (-1) ** r * B(xv, yv) == (-1) ** s * biv[s, r](1 - xv - yv, yv)
                    rep.add("ap-biv-2", p, ok2)
    return rep


def as_umbral_crosscheck(F: AppellFamily, n: int) -> Report:
    """sigma_{n,v} = C(n, v) alpha_{n-v,v} for 0 <= v <= n."""
    rep = Report(f"ac-as[{F.name}]")
    _, table = as_poly(F, n)
    for v in range(n + 1):
        rhs = comb(n, v) * alpha_rs(F, n - v, v)
        rep.add("ac-as", f"n={n},v={v}", table[v] == rhs, f"sigma={table[v]}, rhs={rhs}")
    return rep
