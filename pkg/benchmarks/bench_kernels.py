#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against their pure-Python twins.

Runs the three hot kernels (bipartite-hole search, Hamiltonicity
backtracking, independence-number branch and bound) on seeded G(n, p)
samples with both backends, checks that the results agree bit for bit, and
prints median wall-clock times plus the speedup factor.  The compiled
backend only accepts n <= 64, so sizes above that are reported pure-only.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 24 48 64 --p 0.5 --repeats 5
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from hamholes._kernels import _pure
from hamholes.graph import gnp_graph

try:
    from hamholes._kernels import _speedups
except ImportError:  # extension not built; pure timings still print
    _speedups = None

NATIVE_MAX_N = 64


def _median_time(fn, args, repeats):
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def _workloads(g, budget):
    adj = list(g.adj_bits)
    n = g.n
    b = max(2, n // 4)
    loads = [
        (f"hole_search a={a} b={b}", "hole_search", (adj, n, a, b))
        for a in (2, 3, 4)
        if a + b <= n
    ]
    loads.append(("hamilton_cycle_search", "hamilton_cycle_search", (adj, n, budget)))
    loads.append(("independence_number", "independence_number", (adj, n, budget)))
    return loads


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="compare compiled vs pure-Python kernel timings"
    )
    parser.add_argument(
        "--sizes", type=int, nargs="+", default=[16, 32, 48, 64],
        help="graph sizes to benchmark (default: 16 32 48 64)",
    )
    parser.add_argument("--p", type=float, default=0.5, help="edge probability")
    parser.add_argument("--seed", type=int, default=0, help="G(n,p) seed")
    parser.add_argument(
        "--repeats", type=int, default=3, help="repeats per cell; median is shown"
    )
    parser.add_argument(
        "--budget", type=int, default=10**6,
        help="node budget for the search kernels",
    )
    args = parser.parse_args(argv)
    if args.repeats < 1:
        parser.error("--repeats must be >= 1")

    if _speedups is None:
        print("note: compiled backend unavailable, pure timings only\n")

    width = max(len("workload"), max(len(w[0]) for w in _workloads(gnp_graph(8, 0.5, seed=0), 1)))
    print(f"{'n':>4}  {'workload':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>7}")
    for n in args.sizes:
        g = gnp_graph(n, args.p, seed=args.seed)
        for label, name, call_args in _workloads(g, args.budget):
            pure_t, pure_res = _median_time(
                getattr(_pure, name), call_args, args.repeats
            )
            row = f"{n:>4}  {label:<{width}}  {pure_t * 1e3:>8.3f}ms"
            if _speedups is not None and n <= NATIVE_MAX_N:
                fast_t, fast_res = _median_time(
                    getattr(_speedups, name), call_args, args.repeats
                )
                if fast_res != pure_res:
                    print(f"BACKEND MISMATCH on n={n} {label}:", file=sys.stderr)
                    print(f"  pure:     {pure_res!r}", file=sys.stderr)
                    print(f"  compiled: {fast_res!r}", file=sys.stderr)
                    return 1
                row += f"  {fast_t * 1e3:>8.3f}ms  {pure_t / fast_t:>6.1f}x"
            else:
                row += f"  {'--':>10}  {'--':>7}"
            print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
