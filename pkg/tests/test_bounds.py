"""Threshold formulas: piecewise sizes, clique versions, reference bounds."""

from math import comb

import pytest

from hamconn.bounds import (
    extremal_family,
    phi,
    phi_s,
    reference_bound,
    size_threshold,
)
from hamconn.cliques import f_s_formula, g_s_formula
from hamconn.errors import ParameterError


def test_phi_fixed_points():
    assert phi(16, 8).value == 92
    assert phi(10, 3).value == 34
    assert phi(8, 3).value == 21
    assert phi(9, 3).value == 27
    assert phi(20, 4).value == 148
    assert int(phi(16, 8)) == 92


def test_phi_equals_pairwise_max_everywhere():
    for n in range(6, 201):
        for delta in range(3, n // 2 + 1):
            expect = max(f_s_formula(n, delta, 2), g_s_formula(n, delta, 2))
            assert phi(n, delta).value == expect, (n, delta)


def test_phi_regimes():
    assert phi(30, 3).regime == "F-regime"
    assert phi(30, 7).regime == "G-regime"
    # even boundary 6*delta = n+10 and odd boundary 6*delta = n+13
    assert phi(14, 4).regime == "boundary"
    assert phi(17, 5).regime == "boundary"


def test_phi_s_agrees_with_formula_max():
    for n in range(6, 61):
        for delta in range(3, n // 2 + 1):
            for s in (2, 3, 4):
                expect = max(f_s_formula(n, delta, s), g_s_formula(n, delta, s))
                assert phi_s(n, delta, s).value == expect


def test_phi_validation():
    with pytest.raises(ParameterError):
        phi(10, 2)
    with pytest.raises(ParameterError):
        phi(10, 6)


def test_extremal_family_tiles_by_parity():
    for n in range(6, 120):
        for delta in range(3, n // 2 + 1):
            fam = extremal_family(n, delta)
            assert fam in ({"F"}, {"G"}, {"F", "G"})
            six = 6 * delta
            if n % 2 == 1:
                expect = (
                    {"F"} if six <= n + 11 else {"F", "G"} if six == n + 13 else {"G"}
                )
            else:
                expect = (
                    {"F"} if six <= n + 8 else {"F", "G"} if six == n + 10 else {"G"}
                )
            assert fam == expect, (n, delta)


def test_extremal_family_fixed_points():
    assert extremal_family(8, 3) == {"F", "G"}
    assert extremal_family(7, 3) == {"F"}
    assert extremal_family(16, 8) == {"G"}


def test_reference_bound_fixed_points():
    assert reference_bound("HO", 16, 4).value == 92
    assert reference_bound("ORE_NH", 10).value == comb(9, 2) + 1
    assert reference_bound("ORE_NHC", 10).value == comb(9, 2) + 2
    assert reference_bound("ERDOS", 10, 3).value == max(
        comb(7, 2) + 9, comb(6, 2) + 16
    )
    assert reference_bound("ZHANG", 10, 3).value == max(
        comb(7, 2) + 9, comb(6, 2) + 4 * 3 + 3
    )
    assert reference_bound("SH_PANCYCLIC", 10, 3).value == comb(7, 2) + 9
    assert reference_bound("COR2", 10, delta=3, s=3).value == phi_s(10, 3, 3).value


def test_reference_bound_kind_normalization():
    a = reference_bound("ho", 16, 4).value
    b = reference_bound("HO", 16, 4).value
    c = reference_bound("Ho", 16, 4).value
    assert a == b == c
    with pytest.raises(ParameterError):
        reference_bound("UNKNOWN", 10, 3)


def test_phi_dominates_reference_thresholds():
    # the exact-degree threshold never exceeds the at-least-degree one,
    # which never exceeds the blanket two-above-clique bound
    for n in range(7, 101):
        for delta in range(3, n // 2 + 1):
            p = phi(n, delta).value
            ho = reference_bound("HO", n, delta).value
            nhc = reference_bound("ORE_NHC", n).value
            assert p <= ho <= nhc, (n, delta)


def test_cor2_is_max_over_minimum_degrees():
    for n in range(8, 61):
        t = n // 2
        for k in range(3, t + 1):
            for s in (2, 3, 4):
                expect = max(phi_s(n, d, s).value for d in range(k, t + 1))
                got = reference_bound("COR2", n, delta=k, s=s).value
                assert got == expect, (n, k, s)


def test_size_threshold_degree_clauses():
    n = 12
    assert size_threshold(n, 0) == comb(n - 1, 2)
    assert size_threshold(n, 1) == comb(n - 1, 2) + 1
    assert size_threshold(n, 2) == comb(n - 1, 2) + 2
    for d in range(3, n // 2 + 1):
        assert size_threshold(n, d) == phi(n, d).value
    # degree high enough to force the property outright
    for d in range((n + 1 + 1) // 2, n):
        assert size_threshold(n, d) == -1


def test_convexity_in_delta_and_split_point():
    from hamconn.cliques import lambda_s

    for n in range(8, 61):
        t = n // 2
        for s in (2, 3, 4):
            fs = [f_s_formula(n, d, s) for d in range(3, t + 1)]
            gs = [g_s_formula(n, d, s) for d in range(3, t + 1)]
            ls = [lambda_s(n, x, s) for x in range(3, t + 1)]
            for seq in (fs, gs, ls):
                for i in range(len(seq) - 2):
                    assert seq[i + 2] - 2 * seq[i + 1] + seq[i] >= 0, (n, s, i)
