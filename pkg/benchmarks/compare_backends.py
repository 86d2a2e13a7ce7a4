"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each hot kernel on the same random graphs under both backends and
prints per-kernel timings plus the speedup.  numba compilation happens
during an untimed warmup pass.

Usage:
    python benchmarks/compare_backends.py [--n 400 800] [--density 0.5]
                                          [--repeats 5] [--seed 1]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from kswap import gen_random
from kswap.kernels import get_backend


def full_set_words(n: int) -> np.ndarray:
    words = np.zeros((n + 63) // 64, np.uint64)
    for v in range(n):
        words[v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    return words


def local_search_descent(k, adj, sg, table):
    """Seed with the greedy scan, then swap until locally optimal."""
    order = k.bit_indices(sg)
    q = k.scan_join(adj, order, np.zeros_like(sg))
    cand, pinned = k.build_candidates(adj, sg, q)
    while True:
        u, words = k.exists_improvement(adj, table, q, cand)
        if u < 0:
            return q
        k.apply_improvement(adj, sg, q, cand, pinned, u, words)


def timed(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_graph(n, density, seed, repeats, backends):
    g = gen_random(n, density, seed)
    sg = full_set_words(n)
    tasks = {
        "build_table": lambda k: (lambda: k.build_table()),
        "fv_bio (scan_join)": lambda k: (
            lambda: k.scan_join(g.adj, k.bit_indices(sg), np.zeros_like(sg))),
        "ld_bin": lambda k: (lambda: k.ld_bin(g.adj, sg)),
        "sd_won": lambda k: (lambda: k.sd_won_trace(g.adj, sg)),
        "fvs_qe": lambda k: (lambda: k.fvs_qe(g.adj, TABLES[k.BACKEND_NAME], sg)),
        "ls_1_k descent": lambda k: (
            lambda: local_search_descent(k, g.adj, sg, TABLES[k.BACKEND_NAME])),
    }
    print(f"\nn={n} density={density} m={g.m}")
    print(f"{'kernel':<20}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    for label, make in tasks.items():
        times = {}
        for k in backends:
            fn = make(k)
            fn()  # warmup: numba compile, caches
            times[k.BACKEND_NAME] = timed(fn, repeats)
        ratio = times["numpy"] / times["numba"]
        print(f"{label:<20}{times['numba'] * 1e3:>10.2f}ms"
              f"{times['numpy'] * 1e3:>10.2f}ms{ratio:>9.1f}x")


TABLES = {}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[250, 500, 1000])
    parser.add_argument("--density", type=float, default=0.5)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = [get_backend("numba"), get_backend("numpy")]
    for k in backends:
        TABLES[k.BACKEND_NAME] = k.build_table()
    for n in args.n:
        bench_graph(n, args.density, args.seed, args.repeats, backends)


if __name__ == "__main__":
    main()
