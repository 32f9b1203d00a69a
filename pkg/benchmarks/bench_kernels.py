"""Benchmark the compiled kernels against the pure-Python fallback, and the
end-to-end set-strategy selection on large random chordal graphs.

Usage: python3 benchmarks/bench_kernels.py [--sizes 10000,100000,1000000]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from actdag import _purekernels, kernels
from actdag.corpus import random_chordal_csr
from actdag.strategies import opt_unb_csr


def _time(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backends(p: int, rng: np.random.Generator) -> None:
    indptr, indices = random_chordal_csr(p, 0.5, rng)
    order = np.arange(p, dtype=np.int32)
    print(f"\np={p:>9,}  edges={len(indices) // 2:,}  (backend: {kernels.BACKEND})")
    for name, fast, pure, args in (
        ("lex_bfs", kernels.lex_bfs_csr, _purekernels.lex_bfs_csr, (indptr, indices, order)),
        ("components", kernels.components_csr, _purekernels.components_csr, (indptr, indices)),
    ):
        tf = _time(fast, *args)
        tp = _time(pure, *args, repeat=1)
        print(f"  {name:<12} compiled {tf * 1e3:9.1f} ms   pure {tp * 1e3:9.1f} ms"
              f"   speedup {tp / tf:6.1f}x")
    sigma = kernels.lex_bfs_csr(indptr, indices, order)
    for name, fast, pure in (
        ("greedy_color", kernels.greedy_color_csr, _purekernels.greedy_color_csr),
        ("check_peo", kernels.check_peo_csr, _purekernels.check_peo_csr),
    ):
        tf = _time(fast, indptr, indices, sigma)
        tp = _time(pure, indptr, indices, sigma, repeat=1)
        print(f"  {name:<12} compiled {tf * 1e3:9.1f} ms   pure {tp * 1e3:9.1f} ms"
              f"   speedup {tp / tf:6.1f}x")


def bench_selection(sizes: list[int], rng: np.random.Generator) -> None:
    print("\nend-to-end set-strategy selection (CSR path):")
    times = []
    for p in sizes:
        indptr, indices = random_chordal_csr(p, 0.5, rng)
        t = _time(opt_unb_csr, indptr, indices)
        times.append(t)
        print(f"  p={p:>9,}  edges={len(indices) // 2:,}  {t * 1e3:9.1f} ms")
    if len(sizes) >= 2:
        slope = (np.log(times[-1]) - np.log(times[0])) / (np.log(sizes[-1]) - np.log(sizes[0]))
        print(f"  log-log slope: {slope:.2f}  (1.0 = linear)")


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="10000,100000,1000000")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(args.seed)
    bench_backends(min(sizes), rng)
    bench_selection(sizes, np.random.default_rng(args.seed))


if __name__ == "__main__":
    main()
