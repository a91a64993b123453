"""Benchmark the two GF(p) elimination backends against each other.

Two workloads: the graded-dimension oracle on surface algebras (the hot path
in practice), and a synthetic random sparse echelon.  Results are printed as
a small table; run with --help for knobs.

    python benchmarks/bench_gfp.py
    python benchmarks/bench_gfp.py --genus 3 --degree 8 --skip-random
"""

import argparse
import time

import numpy as np

from gocha import gfp
from gocha.presentation import QuadraticPresentation, graded_dimensions


def surface_presentation(p, genus):
    rel = []
    for j in range(1, genus + 1):
        rel.append((j, genus + j, 1))
        rel.append((genus + j, j, p - 1))
    return QuadraticPresentation(p, 2 * genus, [rel])


def bench_oracle(backend, p, genus, degree, repeats):
    pres = surface_presentation(p, genus)
    prev = gfp.set_backend(backend)
    try:
        graded_dimensions(pres, min(3, degree))  # warm any compilation
        best = float("inf")
        dims = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            dims = graded_dimensions(pres, degree)
            best = min(best, time.perf_counter() - t0)
        return best, dims.dims
    finally:
        gfp.set_backend(prev)


def random_rows(rng, nrows, ncols, nnz_per_row, p):
    idx_parts, val_parts, start = [], [], [0]
    for _ in range(nrows):
        cols = np.sort(rng.choice(ncols, size=min(nnz_per_row, ncols),
                                  replace=False)).astype(np.int64)
        vals = rng.integers(1, p, size=cols.shape[0]).astype(np.int64)
        idx_parts.append(cols)
        val_parts.append(vals)
        start.append(start[-1] + cols.shape[0])
    return (np.concatenate(idx_parts), np.concatenate(val_parts),
            np.array(start, dtype=np.int64))


def bench_random(backend, p, nrows, ncols, nnz, repeats, seed):
    rng = np.random.default_rng(seed)
    rows = random_rows(rng, nrows, ncols, nnz, p)
    prev = gfp.set_backend(backend)
    try:
        gfp.rref_sparse(*random_rows(rng, 4, 8, 3, p), 8, p)  # warm
        best = float("inf")
        rank = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            piv, _, _, _ = gfp.rref_sparse(*rows, ncols, p)
            best = min(best, time.perf_counter() - t0)
            rank = piv.shape[0]
        return best, rank
    finally:
        gfp.set_backend(prev)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--genus", type=int, default=2)
    ap.add_argument("--degree", type=int, default=8)
    ap.add_argument("--rows", type=int, default=1000)
    ap.add_argument("--cols", type=int, default=20000)
    ap.add_argument("--nnz", type=int, default=10, help="entries per random row")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--skip-random", action="store_true")
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if gfp.HAS_NUMBA else [])
    print("available backends: %s (active default: %s)"
          % (", ".join(backends), gfp.backend_name()))

    rows = []
    checks = {}
    for backend in backends:
        took, dims = bench_oracle(backend, args.p, args.genus, args.degree,
                                  args.repeats)
        rows.append(("oracle genus=%d deg=%d" % (args.genus, args.degree),
                     backend, took))
        checks.setdefault("oracle", set()).add(dims)
    if not args.skip_random:
        for backend in backends:
            took, rank = bench_random(backend, args.p, args.rows, args.cols,
                                      args.nnz, args.repeats, args.seed)
            rows.append(("random %dx%d nnz=%d" % (args.rows, args.cols, args.nnz),
                         backend, took))
            checks.setdefault("random", set()).add(rank)

    for results in checks.values():
        assert len(results) == 1, "backends disagree: %r" % (results,)

    width = max(len(r[0]) for r in rows)
    print("%s  %-6s  %10s" % ("workload".ljust(width), "kernel", "best (s)"))
    for name, backend, took in rows:
        print("%s  %-6s  %10.4f" % (name.ljust(width), backend, took))

    by_work = {}
    for name, backend, took in rows:
        by_work.setdefault(name, {})[backend] = took
    for name, times in by_work.items():
        if "numba" in times and "numpy" in times:
            print("%s: numba is %.1fx the numpy speed"
                  % (name, times["numpy"] / times["numba"]))


if __name__ == "__main__":
    main()
