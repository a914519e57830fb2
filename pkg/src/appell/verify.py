"""The ``verify`` suites: every identity check, run to a chosen depth."""
from __future__ import annotations

import random
from typing import Iterable

from .appell import (
    IdentityError,
    ReflectionRequired,
    appell_poly,
    check_appell_properties,
    check_reciprocal_theorems,
    check_reflection,
)
from .family import AlphaOutOfRange, AppellFamily
from .faulhaber import (
    ROUTES,
    LambdaTable,
    a_nk,
    faulhaber_decompose,
    fp_main_check,
    fp_reconstruct,
    fp_recurrence_check,
    fp_value_identities,
    genocchi_zero_sum,
    lambda_table,
    symmetry_cascade,
)
from .powersum import power_sum_bernoulli, power_sum_direct, power_sum_faulhaber
from .report import Case, Report
from .umbral import as_umbral_crosscheck, check_umbral_reciprocity

__all__ = ["SUITES", "run_verify", "DEFAULT_SEED", "POWER_SUM_M"]

SUITES = ("reflection", "reciprocal", "umbral", "faulhaber", "powersum", "all")
DEFAULT_SEED = 1
POWER_SUM_M = 50
# depth caps for the quadratic-in-depth suites
RECIPROCAL_CAP = 12
UMBRAL_CAP = 10


def _rng(seed: int, suite: str, family: str) -> random.Random:
    return random.Random(f"{seed}:{suite}:{family}")


def _reflection(F: AppellFamily, max_n: int, seed: int) -> Report:
    # a finite family is checked as far as its alpha list reaches
    top = F.max_index()
    return check_reflection(F, max_n if top is None else max(min(max_n, top), 1))


def _reciprocal(F: AppellFamily, max_n: int, seed: int) -> Report:
    rep = Report("reciprocal")
    rep.extend(check_appell_properties(F, max_n, _rng(seed, "reciprocal", F.name)))
    rep.extend(check_reciprocal_theorems(F, min(max_n, RECIPROCAL_CAP)))
    return rep


def _umbral(F: AppellFamily, max_n: int, seed: int) -> Report:
    rep = Report("umbral")
    rmax = min(max_n, UMBRAL_CAP)
    rep.extend(check_umbral_reciprocity(F, rmax, rng=_rng(seed, "umbral", F.name)))
    for n in range(max_n + 1):
        rep.extend(as_umbral_crosscheck(F, n))
    return rep


def _faulhaber(F: AppellFamily, max_n: int, seed: int) -> Report:
    rep = Report("faulhaber")
    table = lambda_table(F, max_n)
    rep.add("la-recur", f"n<={max_n}", table.recurrence_holds())
    if not F.asserts_reflection:
        return rep
    for n in range(max_n + 1):
        try:
            _faulhaber_at(F, n, table, rep)
        except (ReflectionRequired, IdentityError) as exc:
            rep.add("faulhaber-error", f"n={n}", False, str(exc))
    return rep


def _faulhaber_at(F: AppellFamily, n: int, table: LambdaTable, rep: Report) -> None:
    p = f"n={n}"
    fps = [faulhaber_decompose(F, n, r) for r in ROUTES]
    FP = fps[0]
    rep.add("route-equivalence", p, all(f == FP for f in fps[1:]))
    rep.add("reconstruction", p, fp_reconstruct(FP) == appell_poly(F, n))
    rep.add("endpoint.constant", p, FP.f(0) == (-1) ** n * F.alpha(n))
    lead = F.alpha(0) / 2 if n % 2 else F.alpha(0)
    rep.add("endpoint.leading", p, FP.f(FP.d) == lead)
    ok = True
    for k in range(n + 1):
        ok &= a_nk(F, n, k) == table.a(n, k)
    rep.add("lambda-bridge", p, ok)
    rep.extend(fp_value_identities(F, n))
    if n >= 2:
        rep.extend(fp_recurrence_check(F, n))
    if n % 2:
        rep.add("fh-an", p, all(FP.h(k) == (-1) ** k * table.a(n, k) for k in range(FP.d + 1)))
        rep.extend(fp_main_check(F, n))
        for k in range((n + 1) // 2, n + 1):
            rep.extend(symmetry_cascade(F, n, k))
            rep.add("genocchi-zero-sum", f"n={n},k={k}", genocchi_zero_sum(n, k) == 0)


def _powersum(max_n: int) -> Report:
    rep = Report("powersum")
    for n in range(max_n + 1):
        ok = True
        for m in range(POWER_SUM_M + 1):
            d = power_sum_direct(n, m)
            ok &= d == power_sum_bernoulli(n, m)
            if n % 2:
                ok &= d == power_sum_faulhaber(n, m)
        routes = "direct=bernoulli=faulhaber" if n % 2 else "direct=bernoulli"
        rep.add("powersum", f"n={n}", ok, f"{routes}, m<={POWER_SUM_M}")
    return rep


_FAMILY_SUITES = {
    "reflection": _reflection,
    "reciprocal": _reciprocal,
    "umbral": _umbral,
    "faulhaber": _faulhaber,
}


def run_verify(
    suite: str,
    max_n: int,
    families: Iterable[AppellFamily],
    seed: int = DEFAULT_SEED,
) -> Report:
    """Run one suite (or ``all``) over the given families; cases come back sorted."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    families = list(families)
    names = list(SUITES[:-1]) if suite == "all" else [suite]
    report = Report(suite)
    for name in names:
        if name == "powersum":
            report.cases.extend(_tagged(_powersum(max_n), name))
            continue
        for F in families:
            try:
                part = _FAMILY_SUITES[name](F, max_n, seed)
            except AlphaOutOfRange as exc:
                part = Report(name)
                part.add("alpha-range", f"n<={max_n}", False, str(exc))
            report.cases.extend(_tagged(part, name, F.name))
    return report.sorted()


def _tagged(part: Report, suite: str, family: str | None = None) -> list[Case]:
    prefix = f"{family}:" if family else ""
    return [Case(f"{suite}.{c.identity_id}", prefix + c.params, c.passed, c.detail) for c in part.cases]
