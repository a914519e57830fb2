"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel runs on the same random integer inputs under both backends;
results are checked for equality before timings are reported. The end-to-end
row times ``faulhaber_decompose`` for n <= 41 in a fresh interpreter per
backend, since the backend is fixed at import.
"""
import argparse
import importlib
import os
import random
import subprocess
import sys
import timeit

from appell import _kernels_py

try:
    _kernels_c = importlib.import_module("appell._kernels")
except ImportError:
    _kernels_c = None

E2E = (
    "from appell.family import make_family\n"
    "from appell.faulhaber import ROUTES, faulhaber_decompose\n"
    "for name in ('bernoulli', 'euler'):\n"
    "    F = make_family(name)\n"
    "    for n in range(42):\n"
    "        for r in ROUTES:\n"
    "            faulhaber_decompose(F, n, r)\n"
)


def _inputs(rng, length, bits):
    return [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(length)]


def _cases(rng):
    a, b = _inputs(rng, 60, 200), _inputs(rng, 60, 200)
    big = _inputs(rng, 120, 64)
    return {
        "convolve 60x60 (200-bit)": lambda k: k.convolve(a, b),
        "taylor_shift 120 (64-bit, c=3)": lambda k: k.taylor_shift(big, 3),
        "horner 120 at 7/11": lambda k: k.horner(big, 7, 11),
        "binomial_row(-7, 200)": lambda k: k.binomial_row(-7, 200),
    }


def _normal(result):
    return result if isinstance(result, int) else list(result)


def _e2e_seconds(pure: bool) -> float:
    env = dict(os.environ, APPELL_PURE_PYTHON="1" if pure else "0")
    code = f"import time; t=time.perf_counter()\n{E2E}print(time.perf_counter()-t)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args(argv)
    if _kernels_c is None:
        print("compiled extension not built; only the fallback can be timed", file=sys.stderr)
    rng = random.Random(0)
    print(f"{'kernel':34} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, fn in _cases(rng).items():
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=args.number, repeat=args.repeat))
        t_py *= 1000 / args.number
        if _kernels_c is None:
            print(f"{label:34} {t_py:10.3f} {'-':>10} {'-':>8}")
            continue
        if _normal(fn(_kernels_py)) != _normal(fn(_kernels_c)):
            raise SystemExit(f"{label}: backends disagree")
        t_c = min(timeit.repeat(lambda: fn(_kernels_c), number=args.number, repeat=args.repeat))
        t_c *= 1000 / args.number
        print(f"{label:34} {t_py:10.3f} {t_c:10.3f} {t_py / t_c:7.1f}x")
    py = _e2e_seconds(pure=True)
    line = f"{'faulhaber n<=41, 3 routes, 2 fams':34} {py * 1000:10.0f}"
    if _kernels_c is not None:
        c = _e2e_seconds(pure=False)
        line += f" {c * 1000:10.0f} {py / c:7.1f}x"
    print(line)


if __name__ == "__main__":
    main()
