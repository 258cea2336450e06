"""Jitted bitset kernels.

Adjacency is an int64 array, one word per vertex, bit u of word v set iff
u and v are adjacent.  Everything stays in int64: bit 63 is never used
(the python layer caps orders well below that), which keeps shifts and
masks free of unsigned-promotion surprises inside nopython mode.

The spanning-path workhorse is an endpoint-set DP: for a fixed start
vertex, ep[S] holds the bitmask of vertices v such that some path with
vertex set S runs from start to v.  Subsets are swept in numeric order,
which refines the subset partial order, so each state is final when read.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True, nogil=True, inline="always")
def _popcount(x):
    # SWAR popcount; the multiply may wrap into bit 63, so mask after the
    # arithmetic shift instead of trusting the high byte.
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return ((x * 0x0101010101010101) >> 56) & 0x7F


@njit(cache=True, nogil=True)
def popcount64(x):
    return _popcount(x)


@njit(cache=True, nogil=True)
def _fill_endpoints(adj, start, ep):
    """Run the endpoint DP from `start` into ep; return the full-set mask."""
    n = adj.shape[0]
    size = 1 << n
    sbit = 1 << start
    for i in range(sbit, size):
        ep[i] = 0
    ep[sbit] = sbit
    for S in range(sbit, size):
        e = ep[S]
        if e == 0:
            continue
        for v in range(n):
            b = 1 << v
            if (S & b) == 0 and (adj[v] & e) != 0:
                ep[S | b] |= b
    return ep[size - 1]


@njit(cache=True, nogil=True)
def ham_endpoints(adj, start):
    """Bitmask of vertices reachable from `start` by a spanning path."""
    ep = np.zeros(1 << adj.shape[0], np.int64)
    return _fill_endpoints(adj, start, ep)


@njit(cache=True, nogil=True)
def _hc_pair_buf(adj, ep):
    n = adj.shape[0]
    for u in range(n - 1):
        endm = _fill_endpoints(adj, u, ep)
        for v in range(u + 1, n):
            if (endm >> v) & 1 == 0:
                return u, v
    return -1, -1


@njit(cache=True, nogil=True)
def hc_failing_pair(adj):
    """Lexicographically first pair with no spanning path, or (-1, -1)."""
    ep = np.zeros(1 << adj.shape[0], np.int64)
    return _hc_pair_buf(adj, ep)


@njit(cache=True, nogil=True)
def clique_count(adj, s):
    """Number of s-vertex cliques, by ordered candidate-set backtracking."""
    n = adj.shape[0]
    if s < 0 or s > n:
        return 0
    if s == 0:
        return 1
    if s == 1:
        return np.int64(n)
    full = np.int64(0)
    for i in range(n):
        full |= 1 << i
    # cand[d] = vertices that extend the d chosen so far; consuming lowest
    # bits first keeps each clique generated once, in increasing order.
    cand = np.zeros(s, np.int64)
    cand[0] = full
    total = np.int64(0)
    depth = 0
    while depth >= 0:
        if s - depth == 1:
            total += _popcount(cand[depth])
            depth -= 1
            continue
        c = cand[depth]
        if c == 0:
            depth -= 1
            continue
        b = c & (-c)
        nc = c & ~b
        cand[depth] = nc
        v = _popcount(b - 1)
        cand[depth + 1] = nc & adj[v]
        depth += 1
    return total


@njit(cache=True, nogil=True)
def sweep_extremal_k(n, delta, k, first, eu, ev, thresholds, codes_out):
    """Scan K_n minus each k-subset of edges with fixed first deleted edge.

    Edge i is (eu[i], ev[i]); for k > 0 only combinations whose smallest
    deleted index equals `first` are visited, so shards partition the
    search space.  Returns (hits, violations, overflow): a hit is a graph
    with minimum degree exactly `delta` and a failing spanning-path pair
    (its deleted-edge bitmask is appended to codes_out); a violation is a
    graph certified by a degree/size condition that the DP then refutes.
    thresholds[d] is the edge count above which exact minimum degree d
    forces the graph hamiltonian-connected.
    """
    m = eu.shape[0]
    size = 1 << n
    ep = np.zeros(size, np.int64)
    adj = np.zeros(n, np.int64)
    base = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    dsort = np.zeros(n, np.int64)
    full = np.int64(0)
    for i in range(n):
        full |= 1 << i
    for v in range(n):
        base[v] = full & ~(1 << v)
    idx = np.zeros(k + 1, np.int64)
    for j in range(1, k):
        idx[j] = first + j
    if k > 0:
        idx[0] = first
    hits = np.int64(0)
    violations = np.int64(0)
    overflow = np.int64(0)
    ncap = codes_out.shape[0]
    while True:
        for v in range(n):
            adj[v] = base[v]
            deg[v] = n - 1
        code = np.int64(0)
        for j in range(k):
            e_i = idx[j]
            a = eu[e_i]
            b = ev[e_i]
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
            deg[a] -= 1
            deg[b] -= 1
            code |= 1 << e_i
        dmin = np.int64(n)
        for v in range(n):
            if deg[v] < dmin:
                dmin = deg[v]
        # Nonadjacent pairs are exactly the deleted edges, so the degree
        # sum condition only needs to look at the combination itself.
        ore = True
        for j in range(k):
            if deg[eu[idx[j]]] + deg[ev[idx[j]]] < n + 1:
                ore = False
                break
        for v in range(n):
            dsort[v] = deg[v]
        for i in range(1, n):
            key = dsort[i]
            j2 = i - 1
            while j2 >= 0 and dsort[j2] > key:
                dsort[j2 + 1] = dsort[j2]
                j2 -= 1
            dsort[j2 + 1] = key
        lick = True
        for i in range(2, n // 2 + 1):
            if dsort[i - 2] <= i and dsort[n - i - 1] <= n - i:
                lick = False
                break
        size_cert = (m - k) > thresholds[dmin]
        cert = ore or lick or size_cert
        if cert or dmin == delta:
            fu, fv = _hc_pair_buf(adj, ep)
            if fu >= 0:
                if cert:
                    violations += 1
                if dmin == delta:
                    if hits < ncap:
                        codes_out[hits] = code
                    else:
                        overflow = 1
                    hits += 1
        if k == 0:
            break
        j = k - 1
        while j >= 1 and idx[j] == m - k + j:
            j -= 1
        if j < 1:
            break
        idx[j] += 1
        for j2 in range(j + 1, k):
            idx[j2] = idx[j2 - 1] + 1
    return hits, violations, overflow


@njit(cache=True, nogil=True)
def sweep_clique_max(n, delta, s, eu, ev):
    """Max s-clique count over every labeled graph on n vertices that has
    minimum degree exactly `delta` and a failing spanning-path pair.
    Returns -1 if no such graph exists."""
    m = eu.shape[0]
    ep = np.zeros(1 << n, np.int64)
    adj = np.zeros(n, np.int64)
    best = np.int64(-1)
    for code in range(1 << m):
        for v in range(n):
            adj[v] = 0
        for j in range(m):
            if (code >> j) & 1:
                a = eu[j]
                b = ev[j]
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        dmin = np.int64(n)
        for v in range(n):
            d = _popcount(adj[v])
            if d < dmin:
                dmin = d
        if dmin != delta:
            continue
        ns = clique_count(adj, s)
        if ns <= best:
            continue
        fu, fv = _hc_pair_buf(adj, ep)
        if fu >= 0:
            best = ns
    return best


@njit(cache=True, nogil=True)
def sweep_clique_collect(n, delta, s, target, eu, ev, codes_out):
    """Edge bitmasks of the graphs sweep_clique_max would score at `target`."""
    m = eu.shape[0]
    ep = np.zeros(1 << n, np.int64)
    adj = np.zeros(n, np.int64)
    hits = np.int64(0)
    overflow = np.int64(0)
    ncap = codes_out.shape[0]
    for code in range(1 << m):
        for v in range(n):
            adj[v] = 0
        for j in range(m):
            if (code >> j) & 1:
                a = eu[j]
                b = ev[j]
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        dmin = np.int64(n)
        for v in range(n):
            d = _popcount(adj[v])
            if d < dmin:
                dmin = d
        if dmin != delta:
            continue
        if clique_count(adj, s) != target:
            continue
        fu, fv = _hc_pair_buf(adj, ep)
        if fu >= 0:
            if hits < ncap:
                codes_out[hits] = code
            else:
                overflow = 1
            hits += 1
    return hits, overflow
