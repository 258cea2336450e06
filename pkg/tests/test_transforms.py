"""Closure and disintegration transforms and their defining invariants."""

import random
from math import comb

import pytest

from conftest import random_graph
from hamconn.cliques import binomial, count_cliques
from hamconn.constructions import build_F
from hamconn.errors import ParameterError
from hamconn.graph import (
    complete,
    cycle,
    degree_sequence,
    edge_count,
    empty_graph,
    min_degree,
    remove_edge,
)
from hamconn.oracle import is_hamiltonian_connected
from hamconn.transforms import hc_closure, t_disintegration


def test_closure_completes_dense_graphs():
    g = remove_edge(complete(5), 1, 3)
    res = hc_closure(g)
    assert res.graph == complete(5)
    assert res.added_edges == ((1, 3),)
    # K6 minus a perfect matching: every missing pair has degree sum 8 >= 7
    g = complete(6)
    for a, b in ((0, 1), (2, 3), (4, 5)):
        g = remove_edge(g, a, b)
    assert hc_closure(g).graph == complete(6)


def test_closure_fixed_point_on_sparse_graphs():
    res = hc_closure(cycle(5))
    assert res.graph == cycle(5) and res.added_edges == ()
    assert hc_closure(build_F(10, 3)).graph == build_F(10, 3)


def test_closure_is_idempotent(rng):
    for _ in range(50):
        n = rng.randrange(3, 11)
        g = random_graph(rng, n, rng.random())
        closed = hc_closure(g).graph
        assert hc_closure(closed).graph == closed


def test_closure_order_independence(rng):
    for _ in range(50):
        n = rng.randrange(3, 10)
        g = random_graph(rng, n, rng.random())
        base = hc_closure(g).graph
        pairs = [(i, j) for j in range(n) for i in range(j)]
        rng.shuffle(pairs)
        assert hc_closure(g, pair_order=pairs).graph == base


def test_closure_preserves_oracle_verdict(rng):
    for _ in range(60):
        n = rng.randrange(3, 9)
        g = random_graph(rng, n, rng.choice([0.5, 0.7, 0.9]))
        res = hc_closure(g)
        assert is_hamiltonian_connected(res.graph) == is_hamiltonian_connected(g)


def test_protected_closure_leaves_vertex_alone(rng):
    for _ in range(40):
        n = rng.randrange(4, 10)
        g = random_graph(rng, n, 0.7)
        v = rng.randrange(n)
        res = hc_closure(g, protected=v)
        assert res.graph.degree(v) == g.degree(v)
        assert all(v not in e for e in res.added_edges)
        assert is_hamiltonian_connected(res.graph) == is_hamiltonian_connected(g)


def test_closure_validation():
    with pytest.raises(ParameterError):
        hc_closure(empty_graph(2))
    with pytest.raises(ParameterError):
        hc_closure(cycle(5), protected=9)


def test_disintegration_on_family():
    # the two low-degree outliers go first, then nothing else is weak enough
    tr = t_disintegration(build_F(12, 3), 6)
    assert [v for v, _ in tr.deleted] == [10, 11]
    assert all(d == 3 for _, d in tr.deleted)
    assert tr.core == complete(10)
    assert tr.core_vertices == tuple(range(10))
    assert tr.t == 6


def test_disintegration_empty_core():
    tr = t_disintegration(cycle(8), 2)
    assert tr.core.n == 0 and len(tr.deleted) == 8
    tr = t_disintegration(complete(4), 0)
    assert tr.core == complete(4) and tr.deleted == ()


def test_disintegration_core_min_degree(rng):
    for _ in range(120):
        n = rng.randrange(1, 13)
        g = random_graph(rng, n, rng.random())
        t = rng.randrange(0, n + 1)
        tr = t_disintegration(g, t)
        assert tr.core.n == 0 or min_degree(tr.core) >= t + 1
        # deletion degrees are measured at deletion time and within budget
        assert all(d <= t for _, d in tr.deleted)


def test_disintegration_first_choice_does_not_change_core(rng):
    for _ in range(60):
        n = rng.randrange(3, 12)
        g = random_graph(rng, n, rng.random())
        t = rng.randrange(1, n)
        base = t_disintegration(g, t)
        eligible = [v for v in range(n) if g.degree(v) <= t]
        for v in eligible[:4]:
            alt = t_disintegration(g, t, first_deleted=v)
            assert alt.core_vertices == base.core_vertices
            assert alt.core == base.core


def test_disintegration_per_step_clique_loss(rng):
    from hamconn.graph import induced_subgraph

    for _ in range(60):
        n = rng.randrange(2, 11)
        g = random_graph(rng, n, rng.random())
        t = rng.randrange(0, n)
        s = rng.choice([2, 3, 4])
        tr = t_disintegration(g, t)
        cur = g
        alive = list(range(n))
        for v, d in tr.deleted:
            pos = alive.index(v)
            nxt = induced_subgraph(cur, [u for u in range(cur.n) if u != pos])
            lost = count_cliques(cur, s) - count_cliques(nxt, s)
            assert 0 <= lost <= binomial(d, s - 1), (n, t, s, v, d)
            cur = nxt
            alive.remove(v)


def test_disintegration_validation():
    with pytest.raises(ParameterError):
        t_disintegration(cycle(5), -1)
    with pytest.raises(ParameterError):
        t_disintegration(cycle(5), 1, first_deleted=0)  # degree 2 > 1
