"""Timing comparison of the numba and numpy kernel backends.

Runs the three hot kernels (matmul, rref, charpoly) over a prime field
and an extension field, at one large size and as a batch of small
matrices, under both backends. The numba backend is warmed first so
JIT compilation does not pollute the numbers.

Usage: python3 benchmarks/bench_kernels.py [--sizes 64,128] [--reps 3]
"""

import argparse
import sys
import time

import numpy as np

sys.path.insert(0, "src")

from stingray import _kernels
from stingray.ffield import make_field


def _random_invertible(rng, ctx, d):
    # rejection sampling; singular matrices are rare over any field
    while True:
        arr = rng.integers(0, ctx.q, size=(d, d), dtype=np.int64)
        r, _, rank = _kernels.rref(ctx, arr, None)
        if rank == d:
            return arr


def _time(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_case(label, ctx, d, batch, reps, rng):
    mats = [_random_invertible(rng, ctx, d) for _ in range(max(2, batch))]
    rows = []

    def run_matmul():
        acc = mats[0]
        for m in mats[1:]:
            acc = _kernels.matmul(ctx, acc, m)
        return acc

    def run_rref():
        for m in mats:
            _kernels.rref(ctx, m, None)

    def run_charpoly():
        for m in mats:
            _kernels.charpoly(ctx, m)

    for name, fn in (("matmul", run_matmul), ("rref", run_rref),
                     ("charpoly", run_charpoly)):
        times = {}
        for backend in ("numpy", "numba"):
            try:
                old = _kernels.set_backend(backend)
            except ValueError:
                times[backend] = None
                continue
            try:
                fn()  # warm-up (JIT compile on first numba call)
                times[backend] = _time(fn, reps)
            finally:
                _kernels.set_backend(old)
        rows.append((label, d, batch, name, times["numpy"], times["numba"]))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="64,128",
                    help="comma list of large matrix sizes")
    ap.add_argument("--small", type=int, default=8,
                    help="small matrix size for the batch case")
    ap.add_argument("--batch", type=int, default=400,
                    help="batch length for the small-matrix case")
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(12648430)
    sizes = [int(s) for s in args.sizes.split(",")]

    fields = [("GF(251)", make_field(251).ctx),
              ("GF(9)", make_field(3, 2).ctx)]

    rows = []
    for label, ctx in fields:
        for d in sizes:
            rows.extend(bench_case(label, ctx, d, 1, args.reps, rng))
        rows.extend(bench_case(label, ctx, args.small, args.batch,
                               args.reps, rng))

    print("backend availability: numba=%s (active default: %s)"
          % ("yes" if _kernels._NUMBA_OK else "no", _kernels.backend()))
    print()
    hdr = "%-8s %5s %6s %-9s %12s %12s %8s" % (
        "field", "d", "batch", "kernel", "numpy (s)", "numba (s)", "speedup")
    print(hdr)
    print("-" * len(hdr))
    for label, d, batch, name, t_np, t_nb in rows:
        if t_nb is None:
            speed = "n/a"
            nb_txt = "n/a"
        else:
            speed = "%.1fx" % (t_np / t_nb) if t_nb > 0 else "inf"
            nb_txt = "%.6f" % t_nb
        print("%-8s %5d %6d %-9s %12.6f %12s %8s"
              % (label, d, batch, name, t_np, nb_txt, speed))
    return 0


if __name__ == "__main__":
    sys.exit(main())
