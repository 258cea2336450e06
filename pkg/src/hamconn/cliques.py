"""Exact s-clique counting and the closed-form clique-count formulas.

The binomial convention C(n,k) = 0 outside 0 <= k <= n makes every
formula total across the boundary parameter values where arguments go
negative; arithmetic is plain python integers, so nothing overflows.
"""

from __future__ import annotations

import math

from . import _kernels
from .errors import ParameterError
from .graph import Graph, WORD_VERTICES, degeneracy_order, induced_subgraph


def binomial(n: int, k: int) -> int:
    """C(n, k), defined as 0 when k < 0, k > n, or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def count_cliques(g: Graph, s: int) -> int:
    """Number of s-cliques of g by exact enumeration."""
    if s < 1:
        raise ParameterError(f"clique size must be at least 1, got {s}")
    if s > g.n:
        return 0
    if s == 1:
        return g.n
    # Degeneracy order keeps candidate sets small on skewed graphs; the
    # count itself is order-independent.
    if g.n <= WORD_VERTICES:
        h = induced_subgraph(g, degeneracy_order(g))
        return int(_kernels.backend().clique_count(h.to_bitrows(), s))
    return _count_python(g, s)


def _count_python(g: Graph, s: int) -> int:
    rows = g.rows

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

    return rec((1 << g.n) - 1, s)


def _check_range(n: int, delta: int, s: int, who: str) -> None:
    if s < 2:
        raise ParameterError(f"{who}: s must be at least 2, got {s}")
    if delta < 3 or delta > n // 2:
        raise ParameterError(
            f"{who}: need 3 <= delta <= floor(n/2) = {n // 2}, got delta={delta}"
        )


def f_s_formula(n: int, delta: int, s: int) -> int:
    """C(n-delta+1, s) + (delta-1) C(delta, s-1): the s-clique count of
    the hub-plus-clique family at (n, delta)."""
    _check_range(n, delta, s, "f_s_formula")
    return binomial(n - delta + 1, s) + (delta - 1) * binomial(delta, s - 1)


def g_s_formula(n: int, delta: int, s: int) -> int:
    """C(n-t+1, s) + (t-2) C(t, s-1) + C(delta, s-1) with t = floor(n/2):
    the s-clique count of the deleted-edges family at (n, delta)."""
    _check_range(n, delta, s, "g_s_formula")
    t = n // 2
    return binomial(n - t + 1, s) + (t - 2) * binomial(t, s - 1) + binomial(delta, s - 1)


def lambda_s(n: int, x: int, s: int) -> int:
    """(x-2) C(x, s-1) + C(n+1-x, s); convex in x, so maxima over an
    integer interval sit at its endpoints."""
    return (x - 2) * binomial(x, s - 1) + binomial(n + 1 - x, s)
