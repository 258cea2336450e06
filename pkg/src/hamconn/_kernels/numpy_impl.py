"""Plain-numpy kernel fallback.

Mirrors the jitted module's API exactly so callers can switch backends
without code changes.  The endpoint DP is vectorized across each
popcount layer of the subset lattice; the exhaustive sweeps reuse the
per-graph routines inside ordinary python loops and are therefore much
slower than the jitted versions, which the benchmark script quantifies.
"""

import itertools

import numpy as np

NAME = "numpy"

_LAYERS: dict[int, list[np.ndarray]] = {}


def _layers(n: int) -> list[np.ndarray]:
    """Subsets of an n-set grouped by popcount, each group ascending."""
    got = _LAYERS.get(n)
    if got is None:
        subsets = np.arange(1 << n, dtype=np.int64)
        pc = np.zeros(1 << n, dtype=np.int64)
        for b in range(n):
            pc += (subsets >> b) & 1
        got = [subsets[pc == c] for c in range(n + 1)]
        _LAYERS[n] = got
    return got


def _fill_endpoints(adj: np.ndarray, start: int, ep: np.ndarray) -> int:
    n = adj.shape[0]
    ep[:] = 0
    ep[1 << start] = 1 << start
    for layer in _layers(n)[1:n]:
        eps = ep[layer]
        live = eps != 0
        if not live.any():
            continue
        subs = layer[live]
        eps = eps[live]
        for v in range(n):
            b = 1 << v
            ok = ((subs & b) == 0) & ((eps & adj[v]) != 0)
            if ok.any():
                # S -> S | b is injective at fixed b, so targets are unique
                t = subs[ok] | b
                ep[t] |= b
    return int(ep[-1])


def ham_endpoints(adj, start):
    adj = np.asarray(adj, dtype=np.int64)
    ep = np.zeros(1 << adj.shape[0], np.int64)
    return _fill_endpoints(adj, int(start), ep)


def _hc_pair_buf(adj, ep):
    n = adj.shape[0]
    for u in range(n - 1):
        endm = _fill_endpoints(adj, u, ep)
        for v in range(u + 1, n):
            if (endm >> v) & 1 == 0:
                return u, v
    return -1, -1


def hc_failing_pair(adj):
    adj = np.asarray(adj, dtype=np.int64)
    ep = np.zeros(1 << adj.shape[0], np.int64)
    return _hc_pair_buf(adj, ep)


def clique_count(adj, s):
    n = len(adj)
    s = int(s)
    if s < 0 or s > n:
        return 0
    if s == 0:
        return 1
    if s == 1:
        return n
    rows = [int(r) for r in adj]

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        c = cand
        while c:
            b = c & -c
            c ^= b
            total += rec(c & rows[b.bit_length() - 1], need - 1)
        return total

    return rec((1 << n) - 1, s)


def _certificates(n, m, k, deg, pairs, thresholds):
    ore = all(deg[a] + deg[b] >= n + 1 for a, b in pairs)
    dsort = sorted(deg)
    lick = not any(
        dsort[i - 2] <= i and dsort[n - i - 1] <= n - i
        for i in range(2, n // 2 + 1)
    )
    return ore or lick or (m - k) > int(thresholds[min(deg)])


def sweep_extremal_k(n, delta, k, first, eu, ev, thresholds, codes_out):
    n, delta, k, first = int(n), int(delta), int(k), int(first)
    m = len(eu)
    ep = np.zeros(1 << n, np.int64)
    base = [((1 << n) - 1) & ~(1 << v) for v in range(n)]
    hits = violations = overflow = 0
    ncap = codes_out.shape[0]
    if k == 0:
        combos = [()]
    else:
        combos = (
            (first,) + rest
            for rest in itertools.combinations(range(first + 1, m), k - 1)
        )
    for combo in combos:
        adj = list(base)
        deg = [n - 1] * n
        code = 0
        pairs = []
        for e_i in combo:
            a, b = int(eu[e_i]), int(ev[e_i])
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
            deg[a] -= 1
            deg[b] -= 1
            code |= 1 << e_i
            pairs.append((a, b))
        dmin = min(deg)
        cert = _certificates(n, m, k, deg, pairs, thresholds)
        if cert or dmin == delta:
            fu, _ = _hc_pair_buf(np.array(adj, np.int64), ep)
            if fu >= 0:
                if cert:
                    violations += 1
                if dmin == delta:
                    if hits < ncap:
                        codes_out[hits] = code
                    else:
                        overflow = 1
                    hits += 1
    return hits, violations, overflow


def _graphs_by_code(n, eu, ev):
    m = len(eu)
    for code in range(1 << m):
        adj = [0] * n
        c = code
        while c:
            b = c & -c
            c ^= b
            j = b.bit_length() - 1
            a, v = int(eu[j]), int(ev[j])
            adj[a] |= 1 << v
            adj[v] |= 1 << a
        yield code, adj


def sweep_clique_max(n, delta, s, eu, ev):
    n, delta, s = int(n), int(delta), int(s)
    ep = np.zeros(1 << n, np.int64)
    best = -1
    for _, adj in _graphs_by_code(n, eu, ev):
        if min(r.bit_count() for r in adj) != delta:
            continue
        ns = clique_count(adj, s)
        if ns <= best:
            continue
        fu, _ = _hc_pair_buf(np.array(adj, np.int64), ep)
        if fu >= 0:
            best = ns
    return best


def sweep_clique_collect(n, delta, s, target, eu, ev, codes_out):
    n, delta, s, target = int(n), int(delta), int(s), int(target)
    ep = np.zeros(1 << n, np.int64)
    hits = overflow = 0
    ncap = codes_out.shape[0]
    for code, adj in _graphs_by_code(n, eu, ev):
        if min(r.bit_count() for r in adj) != delta:
            continue
        if clique_count(adj, s) != target:
            continue
        fu, _ = _hc_pair_buf(np.array(adj, np.int64), ep)
        if fu >= 0:
            if hits < ncap:
                codes_out[hits] = code
            else:
                overflow = 1
            hits += 1
    return hits, overflow


def popcount64(x):
    return int(x).bit_count()
