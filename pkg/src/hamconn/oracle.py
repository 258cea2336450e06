"""Exact spanning-path decisions by subset dynamic programming.

State space is 2^n per start vertex, so every entry point takes an
explicit cap (default 24) and refuses larger instances loudly rather
than thrash.  The DP itself runs on the selected kernel backend; for a
fixed start it produces the bitmask of vertices reachable by a spanning
path, which answers every pair involving that start at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .errors import CapacityError, ParameterError
from .graph import Graph

DEFAULT_DP_CAP = 24


def _checked_rows(g: Graph, dp_cap: int) -> np.ndarray:
    if g.n > dp_cap:
        raise CapacityError(
            f"order {g.n} exceeds the subset-DP cap {dp_cap}; "
            "raise dp_cap explicitly if you mean it"
        )
    return g.to_bitrows()


@dataclass(frozen=True)
class HcReport:
    is_hc: bool
    failing_pair: Optional[tuple[int, int]]
    pair_matrix: Optional[np.ndarray] = None


def hamilton_path(g: Graph, u: int, v: int, dp_cap: int = DEFAULT_DP_CAP) -> bool:
    """Whether a spanning path runs from u to v."""
    if g.n < 2:
        raise ParameterError(f"spanning path needs n >= 2, got {g.n}")
    if u == v:
        raise ParameterError("endpoints must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ParameterError(f"endpoints ({u},{v}) out of range")
    adj = _checked_rows(g, dp_cap)
    endm = int(_kernels.backend().ham_endpoints(adj, u))
    return bool((endm >> v) & 1)


def hamilton_cycle(g: Graph, dp_cap: int = DEFAULT_DP_CAP) -> bool:
    """Whether a spanning cycle exists: anchor at vertex 0 and look for a
    spanning-path endpoint adjacent back to it."""
    if g.n < 3:
        raise ParameterError(f"spanning cycle needs n >= 3, got {g.n}")
    adj = _checked_rows(g, dp_cap)
    endm = int(_kernels.backend().ham_endpoints(adj, 0))
    return bool(endm & int(adj[0]))


def hamiltonian_connected(
    g: Graph, matrix: bool = False, dp_cap: int = DEFAULT_DP_CAP
) -> HcReport:
    """Spanning-path check over all vertex pairs.

    Without `matrix`, stops at the lexicographically first failing pair;
    with it, runs all n start sweeps and returns the full pair matrix
    (diagonal True by convention).
    """
    if g.n < 3:
        raise ParameterError(f"connectivity check needs n >= 3, got {g.n}")
    adj = _checked_rows(g, dp_cap)
    kern = _kernels.backend()
    if not matrix:
        fu, fv = (int(x) for x in kern.hc_failing_pair(adj))
        if fu < 0:
            return HcReport(True, None)
        return HcReport(False, (fu, fv))
    n = g.n
    pm = np.zeros((n, n), dtype=bool)
    np.fill_diagonal(pm, True)
    for u in range(n):
        endm = int(kern.ham_endpoints(adj, u))
        for v in range(n):
            if (endm >> v) & 1:
                pm[u, v] = True
                pm[v, u] = True
    failing = None
    for u in range(n):
        for v in range(u + 1, n):
            if not pm[u, v]:
                failing = (u, v)
                break
        if failing:
            break
    return HcReport(failing is None, failing, pm)


def is_hamiltonian_connected(g: Graph, dp_cap: int = DEFAULT_DP_CAP) -> bool:
    return hamiltonian_connected(g, dp_cap=dp_cap).is_hc
