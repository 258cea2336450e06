"""Desk-scale reproduction of the extremal results.

exhaustive_extremal enumerates every labeled graph of order n with at
least the predicted extremal size (by iterating complements with few
missing edges), oracles the survivors of a minimum-degree filter, and
compares both the observed maximum and the isomorphism classes of the
maximizers against the prediction.  The kernel also re-checks the fast
certificates against the oracle on every enumerated graph, so certificate
soundness rides along for free.

exhaustive_clique_extremal does the clique-count analogue over the full
2^C(n,2) labeled-graph space.  sample_corollary1 probes the size
threshold at orders beyond exhaustive reach with seeded random graphs.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import _kernels
from .bounds import extremal_family, phi, phi_s, size_threshold
from .constructions import build_F, build_G
from .errors import CapacityError, EnumerationBudgetError, ParameterError
from .graph import (
    Graph,
    complete,
    edge_count,
    encode_graph6,
    induced_subgraph,
    remove_edge,
    triangle_bit_pairs,
)

CANONICAL_CAP = 10
_STATE_CAP = 1_000_000


def _refined_labels(g: Graph) -> list[int]:
    """Stable vertex classes from iterated (label, neighbor-label) signatures."""
    n = g.n
    degs = [r.bit_count() for r in g.rows]
    ranks = {d: i for i, d in enumerate(sorted(set(degs)))}
    labels = [ranks[d] for d in degs]
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(labels[u] for u in range(n) if (g.rows[v] >> u) & 1)
            sigs.append((labels[v], tuple(nb)))
        mapping = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [mapping[s] for s in sigs]
        if new == labels:
            return labels
        labels = new


def canonical_form(g: Graph) -> str:
    """graph6 string invariant under relabeling (exact up to n = 10).

    Vertices are grouped by refined class; within that layout the
    ordering minimizing the adjacency bitstream is found by placing one
    position at a time and keeping only orders that achieve the minimal
    next column, which is exact for lexicographic objectives.
    """
    n = g.n
    if n > CANONICAL_CAP:
        raise CapacityError(f"canonical form capped at n = {CANONICAL_CAP}, got {n}")
    if n <= 1 or edge_count(g) in (0, n * (n - 1) // 2):
        return encode_graph6(g)
    labels = _refined_labels(g)
    layout = sorted(labels)
    states: list[tuple[int, ...]] = [()]
    for pos in range(n):
        lab = layout[pos]
        best_col = None
        nxt: list[tuple[int, ...]] = []
        for order in states:
            for v in range(n):
                if labels[v] != lab or v in order:
                    continue
                col = tuple((g.rows[v] >> order[i]) & 1 for i in range(pos))
                if best_col is None or col < best_col:
                    best_col = col
                    nxt = [order + (v,)]
                elif col == best_col:
                    nxt.append(order + (v,))
        states = nxt
        if len(states) > _STATE_CAP:
            raise CapacityError("canonical search exploded; graph too symmetric")
    return encode_graph6(induced_subgraph(g, states[0]))


def _edge_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = triangle_bit_pairs(n)
    eu = np.array([p[0] for p in pairs], dtype=np.int64)
    ev = np.array([p[1] for p in pairs], dtype=np.int64)
    return eu, ev


def _graph_minus_code(n: int, code: int, eu: np.ndarray, ev: np.ndarray) -> Graph:
    g = complete(n)
    c = code
    while c:
        b = c & -c
        c ^= b
        j = b.bit_length() - 1
        g = remove_edge(g, int(eu[j]), int(ev[j]))
    return g


def _graph_from_code(n: int, code: int, eu: np.ndarray, ev: np.ndarray) -> Graph:
    rows = [0] * n
    c = code
    while c:
        b = c & -c
        c ^= b
        j = b.bit_length() - 1
        a, v = int(eu[j]), int(ev[j])
        rows[a] |= 1 << v
        rows[v] |= 1 << a
    return Graph(n, rows, validate=False)


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    delta: int
    observed_max: int | None
    predicted: int
    maximizer_count: int
    maximizer_classes: tuple[str, ...]
    expected_classes: tuple[str, ...]
    expected_families: tuple[str, ...]
    matches_theorem: bool
    coincident_families: bool
    cert_violations: int
    graphs_enumerated: int


def _default_threads(threads: int | None) -> int:
    if threads is not None:
        if threads < 1:
            raise ParameterError(f"threads must be positive, got {threads}")
        return threads
    return min(8, os.cpu_count() or 1)


def _run_shard(kern, n, delta, k, first, eu, ev, thresholds, cap=4096):
    while True:
        codes = np.zeros(cap, np.int64)
        hits, violations, overflow = kern.sweep_extremal_k(
            n, delta, k, first, eu, ev, thresholds, codes
        )
        if not overflow:
            return int(hits), int(violations), codes[: int(hits)].tolist()
        cap = max(cap * 4, int(hits) + 64)


def exhaustive_extremal(
    n: int,
    delta: int,
    threads: int | None = None,
    budget: int = 4_000_000,
) -> ExtremalReport:
    """Confirm the predicted size maximum by brute force at order n (n <= 8).

    Enumerates complements with up to C(n,2) - phi(n,delta) missing
    edges, sharded by the first missing-edge index for the thread pool.
    """
    if n > 8:
        raise ParameterError(f"exhaustive sweep supports n <= 8, got {n}")
    if not 3 <= delta <= n // 2:
        raise ParameterError(
            f"need 3 <= delta <= floor(n/2) = {n // 2}, got delta={delta}"
        )
    predicted = phi(n, delta).value
    m = comb(n, 2)
    kmax = m - predicted
    total = sum(comb(m, k) for k in range(kmax + 1))
    if total > budget:
        raise EnumerationBudgetError(
            f"sweep needs {total} graphs, budget is {budget}", total, budget
        )
    eu, ev = _edge_arrays(n)
    thresholds = np.array([size_threshold(n, d) for d in range(n)], dtype=np.int64)
    kern = _kernels.backend()
    shards = [(0, 0)] + [
        (k, first) for k in range(1, kmax + 1) for first in range(m - k + 1)
    ]
    results: dict[tuple[int, int], tuple[int, int, list[int]]] = {}
    with ThreadPoolExecutor(max_workers=_default_threads(threads)) as pool:
        futs = {
            pool.submit(_run_shard, kern, n, delta, k, first, eu, ev, thresholds): (
                k,
                first,
            )
            for k, first in shards
        }
        for fut, key in futs.items():
            results[key] = fut.result()
    hits_by_k: dict[int, int] = {k: 0 for k in range(kmax + 1)}
    codes_by_k: dict[int, list[int]] = {k: [] for k in range(kmax + 1)}
    cert_violations = 0
    for (k, first) in sorted(results):
        hits, violations, codes = results[(k, first)]
        hits_by_k[k] += hits
        codes_by_k[k].extend(codes)
        cert_violations += violations
    hit_ks = [k for k in range(kmax + 1) if hits_by_k[k]]
    if not hit_ks:
        observed_max = None
        maximizer_codes: list[int] = []
    else:
        observed_max = m - min(hit_ks)
        maximizer_codes = codes_by_k[min(hit_ks)]
    classes = tuple(
        sorted({canonical_form(_graph_minus_code(n, c, eu, ev)) for c in maximizer_codes})
    )
    fams = extremal_family(n, delta)
    builders = {"F": build_F, "G": build_G}
    expected_classes = tuple(
        sorted({canonical_form(builders[f](n, delta)) for f in fams})
    )
    coincident = canonical_form(build_F(n, delta)) == canonical_form(build_G(n, delta))
    matches = observed_max == predicted and classes == expected_classes
    return ExtremalReport(
        n=n,
        delta=delta,
        observed_max=observed_max,
        predicted=predicted,
        maximizer_count=len(maximizer_codes),
        maximizer_classes=classes,
        expected_classes=expected_classes,
        expected_families=tuple(sorted(fams)),
        matches_theorem=matches,
        coincident_families=coincident,
        cert_violations=cert_violations,
        graphs_enumerated=total,
    )


@dataclass(frozen=True)
class CliqueExtremalReport:
    n: int
    delta: int
    s: int
    observed_max: int
    predicted: int
    maximizer_count: int
    maximizer_classes: tuple[str, ...]
    matches_prediction: bool
    graphs_enumerated: int


def exhaustive_clique_extremal(
    n: int, delta: int, s: int, budget: int = 2_200_000
) -> CliqueExtremalReport:
    """Max s-clique count over ALL labeled graphs of order n that have
    minimum degree exactly delta and fail the spanning-path check;
    feasible only through n = 7 (2^21 graphs)."""
    if not 3 <= delta <= n // 2:
        raise ParameterError(
            f"need 3 <= delta <= floor(n/2) = {n // 2}, got delta={delta}"
        )
    if s < 2:
        raise ParameterError(f"s must be at least 2, got {s}")
    m = comb(n, 2)
    total = 1 << m
    if total > budget:
        raise EnumerationBudgetError(
            f"full sweep needs {total} graphs, budget is {budget}", total, budget
        )
    eu, ev = _edge_arrays(n)
    kern = _kernels.backend()
    best = int(kern.sweep_clique_max(n, delta, s, eu, ev))
    predicted = phi_s(n, delta, s).value
    maximizer_codes: list[int] = []
    if best >= 0:
        cap = 1024
        while True:
            codes = np.zeros(cap, np.int64)
            hits, overflow = kern.sweep_clique_collect(n, delta, s, best, eu, ev, codes)
            if not overflow:
                maximizer_codes = codes[: int(hits)].tolist()
                break
            cap = max(cap * 4, int(hits) + 64)
    classes = tuple(
        sorted({canonical_form(_graph_from_code(n, c, eu, ev)) for c in maximizer_codes})
    )
    return CliqueExtremalReport(
        n=n,
        delta=delta,
        s=s,
        observed_max=best,
        predicted=predicted,
        maximizer_count=len(maximizer_codes),
        maximizer_classes=classes,
        matches_prediction=best == predicted,
        graphs_enumerated=total,
    )


@dataclass(frozen=True)
class CorollaryProbe:
    n: int
    delta: int
    trials: int
    counterexamples: int
    attempts: int
    rejections: int
    seed: int
    examples: tuple[str, ...] = field(default=())

    def __int__(self) -> int:
        return self.counterexamples


def sample_corollary1(
    n: int,
    delta: int,
    trials: int,
    seed: int,
    max_attempts: int | None = None,
) -> CorollaryProbe:
    """Probe the size threshold: sample graphs with minimum degree exactly
    delta and size above phi(n, delta), count any that fail the oracle.

    Sampling draws a uniform size in (phi, C(n,2)], then a uniform graph
    of that size, rejecting until the minimum degree matches; the result
    is that conditional distribution, not uniform over the class.
    """
    if not 3 <= delta <= n // 2:
        raise ParameterError(
            f"need 3 <= delta <= floor(n/2) = {n // 2}, got delta={delta}"
        )
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    target = phi(n, delta).value
    m = comb(n, 2)
    if target >= m:
        raise ParameterError(
            f"phi({n},{delta}) = {target} leaves no size above it at order {n}"
        )
    if max_attempts is None:
        max_attempts = 20_000 * trials
    eu, ev = _edge_arrays(n)
    eu_l, ev_l = eu.tolist(), ev.tolist()
    rng = np.random.default_rng(seed)
    batch = 1 << 16
    attempts = 0
    kept: list[np.ndarray] = []
    kept_total = 0
    while kept_total < trials:
        if attempts >= max_attempts:
            raise EnumerationBudgetError(
                f"only {kept_total}/{trials} samples accepted in {attempts} attempts",
                trials,
                max_attempts,
            )
        sizes = rng.integers(target + 1, m + 1, size=batch)
        ks = m - sizes
        for k in np.unique(ks):
            rows = int((ks == k).sum())
            if k == 0:
                continue  # complete graph: minimum degree n-1, never delta
            r = rng.random((rows, m))
            miss = np.argpartition(r, int(k) - 1, axis=1)[:, : int(k)]
            offs = np.arange(rows)[:, None] * n
            flat = np.concatenate(
                [(eu[miss] + offs).ravel(), (ev[miss] + offs).ravel()]
            )
            deficit = np.bincount(flat, minlength=rows * n).reshape(rows, n)
            ok = ((n - 1) - deficit.max(axis=1)) == delta
            if ok.any():
                kept.append(miss[ok])
                kept_total += int(ok.sum())
        attempts += batch
    counter = 0
    examples: list[str] = []
    done = 0
    full = [((1 << n) - 1) & ~(1 << v) for v in range(n)]
    kern = _kernels.backend()
    for block in kept:
        for row in block:
            if done == trials:
                break
            adj = list(full)
            for j in row:
                a, b = eu_l[j], ev_l[j]
                adj[a] &= ~(1 << b)
                adj[b] &= ~(1 << a)
            fu, _ = kern.hc_failing_pair(np.array(adj, np.int64))
            if int(fu) >= 0:
                counter += 1
                if len(examples) < 10:
                    examples.append(encode_graph6(Graph(n, adj, validate=False)))
            done += 1
        if done == trials:
            break
    rejections = attempts - kept_total
    return CorollaryProbe(
        n=n,
        delta=delta,
        trials=trials,
        counterexamples=counter,
        attempts=attempts,
        rejections=rejections,
        seed=seed,
        examples=tuple(examples),
    )
