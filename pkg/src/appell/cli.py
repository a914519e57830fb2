"""Command-line interface: ``appell <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .appell import (
    IdentityError,
    ReflectionRequired,
    appell_poly,
    as_poly,
    generalized_reciprocal,
    reciprocal_appell,
)
from .exact_arith import format_rational
from .family import AlphaOutOfRange, FamilyError, load_family
from .faulhaber import ROUTES, faulhaber_decompose
from .powersum import (
    POWER_SUM_ROUTES,
    classical_faulhaber,
    power_sum_bernoulli,
    power_sum_direct,
    power_sum_faulhaber,
)
from .report import Report
from .tables import FORMATS, TABLES, emit_table
from .umbral import check_umbral_reciprocity
from .verify import DEFAULT_SEED, SUITES, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_FAMILY = "bernoulli"


class UsageError(Exception):
    pass


def _global_options(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS lets the flags appear before or after the subcommand
    parser.add_argument(
        "--family",
        action="append",
        default=argparse.SUPPRESS,
        help="built-in family (bernoulli, euler) or a JSON family file; repeatable for verify",
    )
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    parser.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random spot checks")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common)
    parser = argparse.ArgumentParser(prog="appell", description=__doc__.splitlines()[0])
    _global_options(parser)
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="coefficients of A_n, A_R,n, A_G,n,k or A_S,n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", choices=("poly", "ar", "ag", "as"), default="poly")
    p.add_argument("--k", type=int, help="second index for --what ag (default: n)")

    p = sub.add_parser("umbral", parents=[common], help="reciprocity report for A_{r,s}")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--bivariate", action="store_true", help="include the bivariate reciprocities")

    p = sub.add_parser("faulhaber", parents=[common], help="Faulhaber-type polynomial F_n(u)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=(*ROUTES, "all"), default="all")

    p = sub.add_parser("faulhaber-classical", parents=[common], help="classical Faulhaber polynomial FF_n(y)")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("powersum", parents=[common], help="power sum S_n(m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--via", choices=(*POWER_SUM_ROUTES, "all"), default="all")

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-n", type=int, default=12)

    p = sub.add_parser("table", parents=[common], help="emit a coefficient table")
    p.add_argument("--what", choices=TABLES, required=True)
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--output", help="write to this path instead of stdout")
    return parser


def _families(args) -> list:
    refs = getattr(args, "family", None) or [DEFAULT_FAMILY]
    try:
        return [load_family(r) for r in refs]
    except FamilyError as exc:
        raise UsageError(str(exc)) from exc


def _family(args):
    return _families(args)[-1]


def _print_json(data) -> None:
    print(json.dumps(data, indent=2))


def _print_report(rep: Report, as_json: bool) -> int:
    rep = rep.sorted()
    if as_json:
        _print_json(rep.to_json())
    else:
        groups: dict[str, list[int]] = {}
        for c in rep.cases:
            g = groups.setdefault(c.identity_id, [0, 0])
            g[0 if c.passed else 1] += 1
        for ident, (npass, nfail) in groups.items():
            status = "PASS" if nfail == 0 else "FAIL"
            print(f"{status} {ident}: {npass} passed, {nfail} failed")
        for c in rep.failures():
            print(f"  failed {c.identity_id} [{c.params}] {c.detail}".rstrip())
        counts = rep.counts
        print(f"{rep.suite}: {counts['pass']} passed, {counts['fail']} failed")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_coeffs(args) -> int:
    F = _family(args)
    n = args.n
    if n < 0:
        raise UsageError("--n must be non-negative")
    if args.what == "ag":
        k = n if args.k is None else args.k
        obj = generalized_reciprocal(F, n, k)
        if args.json:
            _print_json({"family": F.name, "what": "ag", "n": n, "k": k, **obj.to_json()})
        else:
            print(" + ".join(f"{format_rational(c)}*x^{e}" for e, c in sorted(obj.terms.items())) or "0")
        return EXIT_OK
    if args.what == "poly":
        P = appell_poly(F, n)
    elif args.what == "ar":
        P = reciprocal_appell(F, n)
    else:
        P = as_poly(F, n)[0]
    if args.json:
        _print_json({"family": F.name, "what": args.what, "n": n, **P.to_json()})
    else:
        print(P)
    return EXIT_OK


def cmd_umbral(args) -> int:
    F = _family(args)
    if args.rmax < 0:
        raise UsageError("--rmax must be non-negative")
    rep = check_umbral_reciprocity(F, args.rmax, bivariate=args.bivariate)
    return _print_report(rep, args.json)


def cmd_faulhaber(args) -> int:
    F = _family(args)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    results = {r: faulhaber_decompose(F, args.n, r) for r in ROUTES}
    chosen = results["subst" if args.route == "all" else args.route]
    agree = all(v == chosen for v in results.values())
    if args.json:
        _print_json(
            {
                "n": chosen.n,
                "delta": chosen.delta,
                "fp": [format_rational(v) for v in chosen.fp],
                "fh": [format_rational(v) for v in chosen.fh],
                "routes_agree": agree,
            }
        )
    else:
        terms = ", ".join(format_rational(v) for v in chosen.fp)
        print(f"F_{chosen.n}(u) coefficients f_{{n,0..{chosen.d}}}: {terms}")
        print(f"delta = {chosen.delta}; routes agree: {agree}")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_faulhaber_classical(args) -> int:
    try:
        FF = classical_faulhaber(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _print_json({"n": FF.n, "coeffs": [format_rational(c) for c in FF.coeffs]})
    else:
        print(f"FF_{FF.n}(y) = {FF.as_polynomial()}".replace("x", "y"))
    return EXIT_OK


def cmd_powersum(args) -> int:
    n, m = args.n, args.m
    if n < 0 or m < 0:
        raise UsageError("--n and --m must be non-negative")
    funcs = {
        "direct": power_sum_direct,
        "bernoulli": power_sum_bernoulli,
        "faulhaber": power_sum_faulhaber,
    }
    if args.via == "all":
        routes = [r for r in POWER_SUM_ROUTES if r != "faulhaber" or n % 2]
    else:
        routes = [args.via]
    try:
        values = {r: funcs[r](n, m) for r in routes}
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    agree = len(set(values.values())) == 1
    if args.json:
        _print_json(
            {"n": n, "m": m, "values": {r: format_rational(v) for r, v in values.items()}, "agree": agree}
        )
    else:
        for r, v in values.items():
            print(f"S_{n}({m}) via {r}: {format_rational(v)}")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    seed = getattr(args, "seed", DEFAULT_SEED)
    rep = run_verify(args.suite, args.max_n, _families(args), seed)
    return _print_report(rep, args.json)


def cmd_table(args) -> int:
    F = _family(args)
    fmt = "json" if args.json else args.format
    try:
        emit_table(args.what, F, args.n_min, args.n_max, fmt, args.output or sys.stdout)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


COMMANDS = {
    "coeffs": cmd_coeffs,
    "umbral": cmd_umbral,
    "faulhaber": cmd_faulhaber,
    "faulhaber-classical": cmd_faulhaber_classical,
    "powersum": cmd_powersum,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, AlphaOutOfRange, OSError) as exc:
        print(f"appell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ReflectionRequired, IdentityError) as exc:
        print(f"appell: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
