#!/usr/bin/env python3
"""Benchmark the accelerated bitset kernels against the portable path.

Times three workloads on both backends and checks they agree bit for bit:
  1. spanning-path endpoint tables over random dense graphs
  2. clique counting over random graphs
  3. the deleted-edge enumeration sweep at order 7

Usage:
    python3 benchmarks/bench_kernels.py [--n N] [--graphs G] [--repeats R]
"""

from __future__ import annotations

import argparse
import random
import time
from math import comb

import numpy as np

from hamconn import _kernels
from hamconn.bounds import size_threshold
from hamconn.graph import Graph, triangle_bit_pairs


def random_adjacency(rng: random.Random, n: int, p: float) -> np.ndarray:
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows, validate=False).to_bitrows()


def bench(label: str, fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<28s} {best * 1e3:10.2f} ms")
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=18, help="order for the endpoint table runs")
    ap.add_argument("--graphs", type=int, default=40, help="graphs per workload")
    ap.add_argument("--repeats", type=int, default=3, help="timing repeats, best kept")
    ap.add_argument("--seed", type=int, default=20260823)
    args = ap.parse_args()

    numpy_k = _kernels.load("numpy")
    try:
        numba_k = _kernels.load("numba")
    except ImportError:
        print("accelerated backend unavailable; timing the portable path only")
        numba_k = None

    rng = random.Random(args.seed)
    dense = [random_adjacency(rng, args.n, 0.7) for _ in range(args.graphs)]
    mixed = [random_adjacency(rng, 16, rng.choice([0.3, 0.5, 0.8]))
             for _ in range(args.graphs)]

    backends = [("numpy", numpy_k)] + ([("numba", numba_k)] if numba_k else [])

    if numba_k is not None:
        # trigger compilation outside the timed region
        numba_k.ham_endpoints(dense[0], 0)
        numba_k.clique_count(mixed[0], 3)

    print(f"endpoint tables: {args.graphs} graphs, n={args.n}")
    ep_res = {}
    for name, kern in backends:
        ep_res[name] = [None] * len(dense)

        def work(kern=kern, res=ep_res[name]):
            for i, adj in enumerate(dense):
                res[i] = int(kern.ham_endpoints(adj, 0))

        bench(name, work, args.repeats)
    if numba_k is not None:
        assert ep_res["numpy"] == ep_res["numba"], "backend mismatch on endpoints"

    print(f"clique counts: {args.graphs} graphs, n=16, s=4")
    cq_res = {}
    for name, kern in backends:
        cq_res[name] = [None] * len(mixed)

        def work(kern=kern, res=cq_res[name]):
            for i, adj in enumerate(mixed):
                res[i] = int(kern.clique_count(adj, 4))

        bench(name, work, args.repeats)
    if numba_k is not None:
        assert cq_res["numpy"] == cq_res["numba"], "backend mismatch on cliques"

    n, delta, k = 7, 3, 3
    m = comb(n, 2)
    pairs = triangle_bit_pairs(n)
    eu = np.array([p[0] for p in pairs], dtype=np.int64)
    ev = np.array([p[1] for p in pairs], dtype=np.int64)
    thresholds = np.array([size_threshold(n, d) for d in range(n)], dtype=np.int64)
    print(f"enumeration sweep: order {n}, {k} deleted edges, all shards")
    sw_res = {}
    if numba_k is not None:
        out = np.zeros(4096, np.int64)
        numba_k.sweep_extremal_k(n, delta, 1, 0, eu, ev, thresholds, out)
    for name, kern in backends:
        totals = [0, 0]

        def work(kern=kern, totals=totals):
            hits = viol = 0
            for first in range(m - k + 1):
                out = np.zeros(4096, np.int64)
                h, v, _ = kern.sweep_extremal_k(n, delta, k, first, eu, ev,
                                                thresholds, out)
                hits += int(h)
                viol += int(v)
            totals[0], totals[1] = hits, viol

        bench(name, work, args.repeats)
        sw_res[name] = tuple(totals)
    if numba_k is not None:
        assert sw_res["numpy"] == sw_res["numba"], "backend mismatch on sweep"
    print("all backends agree")


if __name__ == "__main__":
    main()
