"""Appell families given by their number sequences alpha_0, alpha_1, ..."""
from __future__ import annotations

import json
import threading
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Callable, Sequence

from .exact_arith import as_rational, format_rational

__all__ = [
    "AppellFamily",
    "AlphaOutOfRange",
    "FamilyError",
    "bernoulli_number",
    "genocchi_number",
    "euler_alpha",
    "make_family",
    "load_family",
    "BUILTIN_FAMILIES",
]


class FamilyError(ValueError):
    pass


class AlphaOutOfRange(IndexError):
    pass


_bern_cache: list[Fraction] = [Fraction(1)]
_bern_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if n < len(_bern_cache):
        return _bern_cache[n]
    with _bern_lock:
        cache = _bern_cache
        while len(cache) <= n:
            m = len(cache)
            s = sum((comb(m + 1, k) * cache[k] for k in range(m)), Fraction(0))
            cache.append(-s / (m + 1))
        return cache[n]


def genocchi_number(n: int) -> Fraction:
    """G_n = 2 (1 - 2^n) B_n."""
    return 2 * (1 - 2**n) * bernoulli_number(n)


def euler_alpha(n: int) -> Fraction:
    """E_n(0) = G_{n+1} / (n+1)."""
    return genocchi_number(n + 1) / (n + 1)


class AppellFamily:
    """An Appell sequence represented by ``alpha(n) = A_n(0)``.

    ``asserts_reflection`` records the claim A_n(1-x) = (-1)^n A_n(x); it is
    not verified at construction (see :func:`appell.appell.check_reflection`).
    Values are memoized; concurrent readers may compute the same entry twice
    but always store the same value.
    """

    def __init__(
        self,
        name: str,
        alpha: Callable[[int], object] | Sequence,
        asserts_reflection: bool = False,
    ):
        self.name = name
        self.asserts_reflection = bool(asserts_reflection)
        self._cache: dict[int, Fraction] = {}
        if callable(alpha):
            self._provider = alpha
            self.length = None
        else:
            values = tuple(as_rational(a) for a in alpha)
            self._cache.update(enumerate(values))
            self._provider = None
            self.length = len(values)

    def alpha(self, n: int) -> Fraction:
        if n < 0:
            raise AlphaOutOfRange(f"alpha index {n} is negative")
        try:
            return self._cache[n]
        except KeyError:
            pass
        if self._provider is None:
            raise AlphaOutOfRange(
                f"family {self.name!r} defines alpha_0..alpha_{self.length - 1}; alpha_{n} requested"
            )
        value = as_rational(self._provider(n))
        # dict assignment is atomic; a racing writer stores the same value
        self._cache[n] = value
        return value

    __getitem__ = alpha

    def alphas(self, n: int) -> list[Fraction]:
        """[alpha_0, ..., alpha_n]."""
        return [self.alpha(i) for i in range(n + 1)]

    def max_index(self) -> int | None:
        """Largest available alpha index, or None when unbounded."""
        return None if self.length is None else self.length - 1

    def to_json(self, n: int | None = None) -> dict:
        if n is None:
            if self.length is None:
                raise FamilyError("an explicit length is needed to serialize an unbounded family")
            n = self.length - 1
        return {
            "name": self.name,
            "reflection": self.asserts_reflection,
            "alpha": [format_rational(a) for a in self.alphas(n)],
        }

    def __repr__(self):
        return f"AppellFamily({self.name!r}, reflection={self.asserts_reflection})"


BUILTIN_FAMILIES = ("bernoulli", "euler")


def make_family(name: str, source=None, reflection: bool | None = None) -> AppellFamily:
    """Build a family.

    ``source`` is ``"bernoulli"``, ``"euler"`` or a finite list of rationals.
    With ``source`` omitted, ``name`` itself must be a built-in.
    """
    if source is None:
        source = name
    if isinstance(source, str):
        key = source.lower()
        if key == "bernoulli":
            return AppellFamily(name, bernoulli_number, True if reflection is None else reflection)
        if key == "euler":
            return AppellFamily(name, euler_alpha, True if reflection is None else reflection)
        raise FamilyError(f"unknown built-in family {source!r}; expected one of {BUILTIN_FAMILIES}")
    return AppellFamily(name, list(source), bool(reflection))


def load_family(ref: str) -> AppellFamily:
    """Resolve a built-in name or a JSON family file."""
    if ref.lower() in BUILTIN_FAMILIES:
        return make_family(ref.lower())
    path = Path(ref)
    if not path.exists():
        raise FamilyError(f"unknown family {ref!r}: not a built-in and no such file")
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FamilyError(f"{path}: cannot read family file: {exc}") from exc
    try:
        alpha = [as_rational(str(a)) for a in data["alpha"]]
        name = str(data.get("name", path.stem))
        reflection = bool(data.get("reflection", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise FamilyError(f"{path}: malformed family file: {exc}") from exc
    return make_family(name, alpha, reflection)
