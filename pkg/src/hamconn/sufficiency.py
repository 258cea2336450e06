"""One-sided certificates for hamiltonian-connectivity.

Three fast tests certify that a graph IS hamiltonian-connected (degree
sums, sorted degree sequence, edge count above the extremal threshold)
and one certifies that it is NOT (a separator leaving at least |S|
components).  Each returns a three-valued verdict with a re-checkable
witness; INCONCLUSIVE carries no claim in either direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .bounds import size_threshold
from .errors import ParameterError
from .graph import Graph, bits_of, degree_sequence, edge_count, min_degree


class Outcome(Enum):
    HC_CERTIFIED = "HC_CERTIFIED"
    NHC_CERTIFIED = "NHC_CERTIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: object = None

    def __bool__(self) -> bool:
        return self.outcome is not Outcome.INCONCLUSIVE


def ore_test(g: Graph) -> Verdict:
    """Certify if every nonadjacent pair has degree sum >= n+1.

    Inconclusive verdicts carry the first deficient pair as witness.
    """
    n = g.n
    if n < 3:
        raise ParameterError(f"degree-sum test needs n >= 3, got {n}")
    deg = [r.bit_count() for r in g.rows]
    for u in range(n):
        for v in range(u + 1, n):
            if not (g.rows[u] >> v) & 1 and deg[u] + deg[v] < n + 1:
                return Verdict(Outcome.INCONCLUSIVE, (u, v))
    return Verdict(Outcome.HC_CERTIFIED)


def lick_test(g: Graph) -> Verdict:
    """Certify unless some i in [2, n/2] has d_{i-1} <= i and d_{n-i} <= n-i
    (1-indexed nondecreasing degrees).

    The index range is empty at n = 3, which would certify the 3-vertex
    path wrongly, so certification is restricted to n >= 4.
    """
    n = g.n
    if n < 3:
        raise ParameterError(f"degree-sequence test needs n >= 3, got {n}")
    d = degree_sequence(g)
    for i in range(2, n // 2 + 1):
        if d[i - 2] <= i and d[n - i - 1] <= n - i:
            return Verdict(Outcome.INCONCLUSIVE, i)
    if n < 4:
        return Verdict(Outcome.INCONCLUSIVE)
    return Verdict(Outcome.HC_CERTIFIED)


def size_test(g: Graph) -> Verdict:
    """Certify when the edge count exceeds the extremal threshold for the
    graph's exact minimum degree, or the minimum degree alone suffices."""
    n = g.n
    if n == 0:
        return Verdict(Outcome.INCONCLUSIVE)
    d = min_degree(g)
    threshold = size_threshold(n, d)
    e = edge_count(g)
    if e > threshold:
        return Verdict(Outcome.HC_CERTIFIED, (d, e, threshold))
    return Verdict(Outcome.INCONCLUSIVE, (d, e, threshold))


def separator_certificate(g: Graph, separator: Iterable[int]) -> Verdict:
    """Certify NOT hamiltonian-connected when G - S has at least |S|
    components: a spanning path between two vertices of S would need the
    components threaded between S-vertices, which caps them at |S| - 1."""
    s = sorted(set(separator))
    if any(v < 0 or v >= g.n for v in s):
        raise ParameterError(f"separator {s} not a subset of the vertex set")
    if len(s) < 2:
        raise ParameterError("separator certificate needs at least 2 vertices")
    smask = 0
    for v in s:
        smask |= 1 << v
    rest = [v for v in range(g.n) if not (smask >> v) & 1]
    ncomp = len(connected_components_masked(g, rest))
    if ncomp >= len(s):
        return Verdict(Outcome.NHC_CERTIFIED, tuple(s))
    return Verdict(Outcome.INCONCLUSIVE, tuple(s))


def connected_components_masked(g: Graph, vertices: list[int]) -> list[list[int]]:
    """Components of the subgraph induced on `vertices`, original labels."""
    keep = 0
    for v in vertices:
        keep |= 1 << v
    seen = 0
    comps = []
    for v in vertices:
        if (seen >> v) & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits_of(frontier):
                nxt |= g.rows[u]
            frontier = nxt & keep & ~comp
        seen |= comp
        comps.append(bits_of(comp))
    return comps
