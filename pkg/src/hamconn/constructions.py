"""Extremal family constructors with pinned vertex labeling.

Two parametric families realize the maximum size / clique count among
graphs of order n and minimum degree delta that are not
hamiltonian-connected, plus the four classical extremal graphs for the
unconstrained problems.  Labeling is fixed so degree sequences and hub
positions are reproducible: hub block first, clique block next,
independent block last.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph, complete, empty_graph, join, disjoint_union, remove_edge

FAMILIES = ("F", "G", "ORE_NH_A", "ORE_NH_B", "ORE_NHC_A", "ORE_NHC_B")


@dataclass(frozen=True)
class ConstructionSpec:
    """Name plus parameters of one of the known extremal graphs."""

    family: str
    n: int
    delta: int | None = None


def _check_range(n: int, delta: int, who: str) -> None:
    if delta < 3:
        raise ParameterError(f"{who}: delta must be at least 3, got {delta}")
    if delta > n // 2:
        raise ParameterError(
            f"{who}: delta must be at most floor(n/2) = {n // 2}, got {delta}"
        )


def build_F(n: int, delta: int) -> Graph:
    """Hub K_delta joined to (K_{n-2delta+1} plus delta-1 isolated vertices).

    Vertices 0..delta-1 are the hub (degree n-1), delta..n-delta the inner
    clique (degree n-delta), and the last delta-1 vertices are independent
    (degree delta).  Minimum degree is exactly delta.
    """
    _check_range(n, delta, "build_F")
    side = disjoint_union(complete(n - 2 * delta + 1), empty_graph(delta - 1))
    return join(complete(delta), side)


def build_G(n: int, delta: int) -> Graph:
    """build_F(n, t) for t = floor(n/2), with t - delta hub edges removed
    from the last vertex so its degree drops to exactly delta.

    The removed edges go to hub vertices 0..t-delta-1; any choice gives an
    isomorphic graph, this one is pinned for reproducibility.
    """
    t = n // 2
    _check_range(n, delta, "build_G")
    g = build_F(n, t)
    for h in range(t - delta):
        g = remove_edge(g, h, n - 1)
    return g


def hub_vertices(family: str, n: int, delta: int) -> list[int]:
    """The join-side clique whose removal disconnects the construction."""
    if family == "F":
        return list(range(delta))
    if family == "G":
        return list(range(n // 2))
    raise ParameterError(f"no hub defined for family {family!r}")


def build_classical(
    spec: ConstructionSpec | str, n: int | None = None, delta: int | None = None
) -> Graph:
    """Build any named extremal graph; accepts a spec or (family, n[, delta])."""
    if isinstance(spec, ConstructionSpec):
        family, n, delta = spec.family, spec.n, spec.delta
    else:
        family = spec
        if n is None:
            raise ParameterError("build_classical needs an order n")
    if family == "F":
        if delta is None:
            raise ParameterError("family F needs delta")
        return build_F(n, delta)
    if family == "G":
        if delta is None:
            raise ParameterError("family G needs delta")
        return build_G(n, delta)
    if family == "ORE_NH_A":
        # K_1 joined to (K_{n-2} plus an isolated vertex); the join vertex
        # is a cut vertex, so the graph has no spanning cycle.
        if n < 3:
            raise ParameterError(f"ORE_NH_A needs n >= 3, got {n}")
        return join(complete(1), disjoint_union(complete(n - 2), empty_graph(1)))
    if family == "ORE_NH_B":
        if n != 5:
            raise ParameterError(f"ORE_NH_B is a 5-vertex graph, got n={n}")
        return join(complete(2), empty_graph(3))
    if family == "ORE_NHC_A":
        if n != 6:
            raise ParameterError(f"ORE_NHC_A is a 6-vertex graph, got n={n}")
        return join(complete(3), empty_graph(3))
    if family == "ORE_NHC_B":
        if n < 4:
            raise ParameterError(f"ORE_NHC_B needs n >= 4, got {n}")
        return join(complete(2), disjoint_union(complete(n - 3), empty_graph(1)))
    raise ParameterError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
