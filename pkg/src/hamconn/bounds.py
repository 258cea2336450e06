"""Closed-form extremal thresholds and the family characterization.

phi_s / phi give the maximum s-clique count / size of a graph with order
n and minimum degree exactly delta that is not hamiltonian-connected;
extremal_family names which construction(s) attain it.  reference_bound
evaluates the six classical bounds this work refines, under their own
(sometimes different) hypotheses: minimum degree *at least* delta, no
degree constraint, connectivity constraints, or pancyclicity.

All piecewise conditions compare 6*delta against shifted n in exact
integer arithmetic; regime boundaries are where off-by-one bugs live, so
whenever two branch conditions hold simultaneously both branches are
evaluated and checked equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import binomial, f_s_formula, g_s_formula
from .errors import ParameterError

KINDS = (
    "ORE_NH",
    "ERDOS",
    "ZHANG",
    "SH_PANCYCLIC",
    "ORE_NHC",
    "HO",
    "COR2",
    "PHI_S",
    "PHI",
)


@dataclass(frozen=True)
class BoundResult:
    value: int
    regime: str
    formula_kind: str

    def __int__(self) -> int:
        return self.value


def _check_delta_range(n: int, delta: int, who: str) -> None:
    if delta < 3 or delta > n // 2:
        raise ParameterError(
            f"{who}: need 3 <= delta <= floor(n/2) = {n // 2}, got delta={delta}"
        )


def phi_s(n: int, delta: int, s: int) -> BoundResult:
    """max{f_s, g_s}; the regime records which family attains it."""
    _check_delta_range(n, delta, "phi_s")
    f = f_s_formula(n, delta, s)
    g = g_s_formula(n, delta, s)
    if f > g:
        return BoundResult(f, "F-regime", "PHI_S")
    if g > f:
        return BoundResult(g, "G-regime", "PHI_S")
    return BoundResult(f, "boundary", "PHI_S")


def _exact_div(num: int, den: int) -> int:
    if num % den:
        raise AssertionError(f"{num} not divisible by {den}")
    return num // den


def phi(n: int, delta: int) -> BoundResult:
    """Piecewise maximum size at exact minimum degree delta.

    Small delta: C(n-delta+1,2) + delta(delta-1).  Dense regime:
    (3n^2-8n+13)/8 + delta for odd n, (3n^2-6n)/8 + delta for even n.
    The case conditions overlap at 6*delta = n+13 (odd) / n+10 (even);
    there both values must agree and the regime is reported as boundary.
    """
    _check_delta_range(n, delta, "phi")
    cut = n + 13 if n % 2 else n + 10
    small = 6 * delta <= cut
    dense = 6 * delta >= cut
    value_small = binomial(n - delta + 1, 2) + delta * (delta - 1)
    if n % 2:
        value_dense = _exact_div(3 * n * n - 8 * n + 13, 8) + delta
    else:
        value_dense = _exact_div(3 * n * n - 6 * n, 8) + delta
    if small and dense:
        if value_small != value_dense:
            raise AssertionError(
                f"phi({n},{delta}): branch disagreement {value_small} != {value_dense}"
            )
        return BoundResult(value_small, "boundary", "PHI")
    if small:
        return BoundResult(value_small, "F-regime", "PHI")
    return BoundResult(value_dense, "G-regime", "PHI")


def extremal_family(n: int, delta: int) -> frozenset:
    """Which of the two families attain phi(n, delta): {F}, {G}, or both.

    Both occur exactly at 6*delta = n+13 (n odd) / n+10 (n even); below
    that F alone, above it G alone.  The three integer ranges tile the
    whole valid (n, delta) domain because 6*delta and the two enclosing
    thresholds always differ in parity.
    """
    _check_delta_range(n, delta, "extremal_family")
    six = 6 * delta
    if n % 2:
        if six <= n + 11:
            return frozenset({"F"})
        if six == n + 13:
            return frozenset({"F", "G"})
        return frozenset({"G"})
    if six <= n + 8:
        return frozenset({"F"})
    if six == n + 10:
        return frozenset({"F", "G"})
    return frozenset({"G"})


def _ore_nh(n: int) -> BoundResult:
    if n < 3:
        raise ParameterError(f"ORE_NH needs n >= 3, got {n}")
    return BoundResult(binomial(n - 1, 2) + 1, "single", "ORE_NH")


def _ore_nhc(n: int) -> BoundResult:
    if n < 3:
        raise ParameterError(f"ORE_NHC needs n >= 3, got {n}")
    return BoundResult(binomial(n - 1, 2) + 2, "single", "ORE_NHC")


def _two_term(a: int, b: int, kind: str) -> BoundResult:
    if a > b:
        return BoundResult(a, "delta-term", kind)
    if b > a:
        return BoundResult(b, "half-term", kind)
    return BoundResult(a, "boundary", kind)


def _erdos(n: int, delta: int) -> BoundResult:
    h = (n - 1) // 2
    if not 1 <= delta <= h:
        raise ParameterError(
            f"ERDOS needs 1 <= delta <= floor((n-1)/2) = {h}, got delta={delta}"
        )
    return _two_term(
        binomial(n - delta, 2) + delta * delta, binomial(n - h, 2) + h * h, "ERDOS"
    )


def _zhang(n: int, delta: int) -> BoundResult:
    if delta < 1 or n < delta + 1:
        raise ParameterError(f"ZHANG needs 1 <= delta <= n-1, got n={n}, delta={delta}")
    t = (n - 1) // 2
    return _two_term(
        binomial(n - delta, 2) + delta * delta,
        binomial(n - t, 2) + t * (t - 1) + delta,
        "ZHANG",
    )


def _sh_pancyclic(n: int, delta: int) -> BoundResult:
    odd = n % 2 == 1
    top = (n - 1) // 2 if odd else (n - 2) // 2
    if not 1 <= delta <= top:
        raise ParameterError(
            f"SH_PANCYCLIC needs 1 <= delta <= {top} for n={n}, got delta={delta}"
        )
    cut = n + 5 if odd else n + 8
    small = 6 * delta <= cut
    dense = 6 * delta >= cut
    value_small = binomial(n - delta, 2) + delta * delta
    if odd:
        value_dense = _exact_div(3 * n * n - 8 * n + 5, 8) + delta
    else:
        value_dense = _exact_div(3 * n * n - 10 * n + 16, 8) + delta
    if small and dense:
        if value_small != value_dense:
            raise AssertionError("SH_PANCYCLIC branch disagreement")
        return BoundResult(value_small, "boundary", "SH_PANCYCLIC")
    if small:
        return BoundResult(value_small, "small-delta", "SH_PANCYCLIC")
    return BoundResult(value_dense, "dense", "SH_PANCYCLIC")


def _ho(n: int, delta: int) -> BoundResult:
    """Maximum size at minimum degree at least delta; the dense case takes
    over strictly above 6*delta = n+9 (odd) / n+6 (even), no overlap."""
    _check_delta_range(n, delta, "HO")
    t = n // 2
    cut = n + 9 if n % 2 else n + 6
    if 6 * delta <= cut:
        value = binomial(n - delta + 1, 2) + delta * (delta - 1)
        return BoundResult(value, "small-delta", "HO")
    value = binomial(n - t + 1, 2) + t * (t - 1)
    return BoundResult(value, "half-regime", "HO")


def _cor2(n: int, k: int, s: int) -> BoundResult:
    """s-clique bound for 3-connected instances: max{f_s(n,k), g_s(n,t)}."""
    if s is None or s < 2:
        raise ParameterError(f"COR2 needs s >= 2, got {s}")
    _check_delta_range(n, k, "COR2")
    f = f_s_formula(n, k, s)
    g = g_s_formula(n, n // 2, s)
    if f > g:
        return BoundResult(f, "F-regime", "COR2")
    if g > f:
        return BoundResult(g, "G-regime", "COR2")
    return BoundResult(f, "boundary", "COR2")


def reference_bound(
    kind: str, n: int, delta: int | None = None, s: int | None = None
) -> BoundResult:
    """Evaluate one classical bound by name; delta doubles as the
    connectivity k for COR2."""
    key = kind.upper().replace("-", "_")
    if key == "ORE_NH":
        return _ore_nh(n)
    if key == "ORE_NHC":
        return _ore_nhc(n)
    if key in ("PHI", "PHI_S", "ERDOS", "ZHANG", "SH_PANCYCLIC", "HO", "COR2") and delta is None:
        raise ParameterError(f"{key} needs delta")
    if key == "ERDOS":
        return _erdos(n, delta)
    if key == "ZHANG":
        return _zhang(n, delta)
    if key == "SH_PANCYCLIC":
        return _sh_pancyclic(n, delta)
    if key == "HO":
        return _ho(n, delta)
    if key == "COR2":
        return _cor2(n, delta, s)
    if key == "PHI":
        return phi(n, delta)
    if key == "PHI_S":
        if s is None:
            raise ParameterError("PHI_S needs s")
        return phi_s(n, delta, s)
    raise ParameterError(f"unknown bound kind {kind!r}; known: {', '.join(KINDS)}")


def size_threshold(n: int, d: int) -> int:
    """Largest size a graph of order n and exact minimum degree d can have
    without being hamiltonian-connected; exceeding it certifies.

    d >= (n+1)/2 returns -1 (the degree bound alone certifies); d = 0 is
    the disconnected case where no size ever certifies.
    """
    if not 0 <= d <= max(n - 1, 0):
        raise ParameterError(f"degree {d} out of range for order {n}")
    if 2 * d >= n + 1:
        return -1
    if d == 0:
        return binomial(n - 1, 2)
    if d == 1:
        return binomial(n - 1, 2) + 1
    if d == 2:
        return binomial(n - 1, 2) + 2
    return phi(n, d).value
