"""Degree-sum closure and core decomposition.

hc_closure repeatedly inserts an edge between nonadjacent vertices whose
degree sum is at least n+1; such insertions preserve whether the graph
is hamiltonian-connected in both directions, so the closure is a cheaper
proxy for the original.  The optional protected vertex is exempted from
insertions, which pins the minimum degree when the protected vertex is
the unique minimum-degree vertex.

t_disintegration deletes vertices of degree at most t one at a time
until none remain eligible; the survivor set (the (t+1)-core) does not
depend on the deletion order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ParameterError
from .graph import Graph, bits_of, induced_subgraph


@dataclass(frozen=True)
class ClosureResult:
    graph: Graph
    added_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DisintegrationTrace:
    deleted: tuple[tuple[int, int], ...]  # (vertex, degree at deletion)
    core: Graph  # induced on core_vertices, relabeled 0..k-1
    core_vertices: tuple[int, ...]  # original labels, ascending
    t: int


def hc_closure(
    g: Graph,
    protected: Optional[int] = None,
    pair_order: Optional[Sequence[tuple[int, int]]] = None,
) -> ClosureResult:
    """Close g under degree-sum edge insertion.

    Pairs are scanned lexicographically and the scan restarts after every
    insertion; pair_order overrides the scan sequence (used to test that
    the final graph is order-independent).
    """
    n = g.n
    if n < 3:
        raise ParameterError(f"closure needs at least 3 vertices, got {n}")
    if protected is not None and not 0 <= protected < n:
        raise ParameterError(f"protected vertex {protected} out of range")
    rows = list(g.rows)
    deg = [r.bit_count() for r in rows]
    if pair_order is None:
        pair_order = [(u, v) for u in range(n) for v in range(u + 1, n)]
    added = []
    changed = True
    while changed:
        changed = False
        for u, v in pair_order:
            if u == protected or v == protected:
                continue
            if (rows[u] >> v) & 1:
                continue
            if deg[u] + deg[v] >= n + 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                added.append((u, v) if u < v else (v, u))
                changed = True
                break
    return ClosureResult(Graph(n, rows, validate=False), tuple(added))


def t_disintegration(
    g: Graph, t: int, first_deleted: Optional[int] = None
) -> DisintegrationTrace:
    """Strip vertices of degree <= t, lowest index first, one per step."""
    if t < 0:
        raise ParameterError(f"threshold t must be nonnegative, got {t}")
    n = g.n
    rows = list(g.rows)
    alive = (1 << n) - 1
    deleted = []

    def degree(v: int) -> int:
        return (rows[v] & alive).bit_count()

    if first_deleted is not None:
        if not 0 <= first_deleted < n:
            raise ParameterError(f"vertex {first_deleted} out of range")
        d = degree(first_deleted)
        if d > t:
            raise ParameterError(
                f"first_deleted vertex {first_deleted} has degree {d} > t = {t}"
            )
        deleted.append((first_deleted, d))
        alive &= ~(1 << first_deleted)
    while True:
        victim = -1
        for v in range(n):
            if (alive >> v) & 1 and degree(v) <= t:
                victim = v
                break
        if victim < 0:
            break
        deleted.append((victim, degree(victim)))
        alive &= ~(1 << victim)
    core_vertices = tuple(bits_of(alive))
    core = induced_subgraph(g, core_vertices)
    return DisintegrationTrace(tuple(deleted), core, core_vertices, t)
