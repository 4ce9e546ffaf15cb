"""Compare the compiled and pure-Python polynomial kernels.

Run with ``python bench/bench_kernels.py [--degree 12] [--repeat 5]``. Kernel
timings use ``timeit``; the end-to-end row runs one full extraction in a
fresh interpreter per backend so the import-time backend switch is honoured.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from gmpy2 import mpq

from colombeau_lab.exactcalc import _pykernels

try:
    from colombeau_lab.exactcalc import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

END_TO_END = (
    "import time\n"
    "from colombeau_lab.mollifier import default_mollifier\n"
    "from colombeau_lab.models import nu_plus\n"
    "from colombeau_lab.association import extract\n"
    "t = time.perf_counter()\n"
    "extract(nu_plus(2), default_mollifier(), 4)\n"
    "print(time.perf_counter() - t)\n"
)


def random_poly(rng, n):
    return tuple(mpq(rng.randint(-10**6, 10**6), rng.randint(1, 10**6)) for _ in range(n))


def kernel_cases(degree, rng):
    a, b = random_poly(rng, degree + 1), random_poly(rng, degree + 1)
    c = mpq(rng.randint(-99, 99), rng.randint(1, 99))
    return {
        "add": (a, b),
        "mul": (a, b),
        "scale": (a, c),
        "deriv": (a,),
        "antideriv": (a,),
        "horner": (a, c),
        "taylor_shift": (a, c),
        "dilate": (a, c),
    }


def time_kernel(mod, name, args, repeat, number):
    fn = getattr(mod, name)
    return min(timeit.repeat(lambda: fn(*args), repeat=repeat, number=number)) / number


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("COLOMBEAU_PURE_PYTHON", None)
    if pure:
        env["COLOMBEAU_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True, capture_output=True, text=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=2000)
    ap.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rng = random.Random(0)
    rows = []
    for name, kargs in kernel_cases(args.degree, rng).items():
        py = time_kernel(_pykernels, name, kargs, args.repeat, args.number)
        cy = time_kernel(_ckernels, name, kargs, args.repeat, args.number)
        rows.append({"kernel": name, "python_us": py * 1e6, "cython_us": cy * 1e6, "speedup": py / cy})
    py = min(end_to_end(True) for _ in range(3))
    cy = min(end_to_end(False) for _ in range(3))
    rows.append({"kernel": "extract(nu_plus:2, p=4)", "python_us": py * 1e6, "cython_us": cy * 1e6, "speedup": py / cy})

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"degree {args.degree}, best of {args.repeat}")
    print(f"{'kernel':<26}{'python us':>12}{'cython us':>12}{'speedup':>9}")
    for r in rows:
        print(f"{r['kernel']:<26}{r['python_us']:>12.2f}{r['cython_us']:>12.2f}{r['speedup']:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
