"""Graph container, builders, invariants, and serialization."""

import random

import pytest

from conftest import random_graph
from hamconn.errors import CapacityError, Graph6ParseError, ParameterError
from hamconn.graph import (
    Graph,
    add_edge,
    complement,
    complete,
    connected_components,
    cycle,
    decode_graph6,
    degeneracy_order,
    degree_sequence,
    disjoint_union,
    edge_count,
    empty_graph,
    encode_graph6,
    export_dot,
    from_edges,
    induced_subgraph,
    is_connected,
    join,
    min_degree,
    relabel,
    remove_edge,
    vertex_connectivity,
)


def test_construction_and_validation():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4 and edge_count(g) == 3
    assert g.has_edge(1, 2) and not g.has_edge(0, 3)
    assert g.degree(1) == 2
    with pytest.raises(ParameterError):
        Graph(3, [1, 1])  # row count mismatch
    with pytest.raises(ParameterError):
        from_edges(3, [(0, 0)])  # self loop
    with pytest.raises(ParameterError):
        from_edges(3, [(0, 5)])  # out of range
    with pytest.raises(ParameterError):
        Graph(2, [2, 0])  # asymmetric adjacency


def test_graph_equality_and_hash():
    a = cycle(5)
    b = from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert a == b and hash(a) == hash(b)
    assert a != remove_edge(a, 0, 1)


def test_builders_shapes():
    assert edge_count(complete(7)) == 21
    assert edge_count(empty_graph(7)) == 0
    assert degree_sequence(cycle(6)) == (2,) * 6
    j = join(complete(3), empty_graph(3))
    assert edge_count(j) == 12  # 3 internal + 9 across
    assert degree_sequence(j) == (3, 3, 3, 5, 5, 5)
    du = disjoint_union(complete(3), complete(2))
    assert edge_count(du) == 4 and not du.has_edge(2, 3)
    assert complement(empty_graph(5)) == complete(5)
    assert complement(complement(cycle(7))) == cycle(7)


def test_edge_editing():
    g = empty_graph(4)
    g = add_edge(g, 0, 3)
    assert g.has_edge(3, 0)
    assert remove_edge(g, 0, 3) == empty_graph(4)
    with pytest.raises(ParameterError):
        add_edge(g, 2, 2)


def test_induced_subgraph_and_relabel():
    g = cycle(6)
    h = induced_subgraph(g, [0, 1, 2])  # path on 3 vertices
    assert h.n == 3 and edge_count(h) == 2
    perm = [3, 1, 4, 0, 2]
    r = relabel(cycle(5), perm)
    assert edge_count(r) == 5 and degree_sequence(r) == (2,) * 5
    with pytest.raises(ParameterError):
        relabel(cycle(5), [0, 1, 2, 3, 3])


def test_degree_helpers():
    g = from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    assert degree_sequence(g) == (1, 1, 2, 2, 4)
    assert min_degree(g) == 1
    with pytest.raises(ParameterError):
        min_degree(empty_graph(0))


def test_degeneracy_order_is_permutation():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randrange(1, 12)
        g = random_graph(rng, n, rng.random())
        order = degeneracy_order(g)
        assert sorted(order) == list(range(n))


def test_connectivity():
    assert is_connected(cycle(5))
    assert not is_connected(disjoint_union(complete(3), complete(3)))
    comps = connected_components(disjoint_union(complete(2), empty_graph(2)))
    assert comps == [[0, 1], [2], [3]]
    assert vertex_connectivity(complete(6)) == 5
    assert vertex_connectivity(cycle(8)) == 2
    assert vertex_connectivity(disjoint_union(complete(2), complete(2))) == 0
    # two blocks sharing a cut vertex
    g = from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert vertex_connectivity(g) == 1


def test_vertex_connectivity_random_against_component_bound(rng):
    # deleting any (kappa-1)-set must leave the graph connected
    from itertools import combinations

    for _ in range(30):
        n = rng.randrange(4, 9)
        g = random_graph(rng, n, 0.5)
        k = vertex_connectivity(g)
        if not is_connected(g):
            assert k == 0
            continue
        assert k >= 1
        for cut in combinations(range(n), k - 1):
            keep = [v for v in range(n) if v not in cut]
            assert is_connected(induced_subgraph(g, keep))


def test_graph6_roundtrip_random(rng):
    for _ in range(200):
        n = rng.randrange(0, 16)
        g = random_graph(rng, n, rng.random())
        assert decode_graph6(encode_graph6(g)) == g


def test_graph6_known_strings():
    assert encode_graph6(complete(5)) == "D~{"
    assert decode_graph6("D~{") == complete(5)
    assert decode_graph6(">>graph6<<DQo") == decode_graph6("DQo")
    assert encode_graph6(empty_graph(0)) == "?"
    assert decode_graph6("?").n == 0


def test_graph6_large_header_roundtrip():
    g = cycle(100)
    s = encode_graph6(g)
    assert s.startswith("~")
    assert decode_graph6(s) == g


def test_graph6_parse_errors_carry_offsets():
    with pytest.raises(Graph6ParseError) as exc:
        decode_graph6("D~")  # truncated body
    assert exc.value.offset is not None
    with pytest.raises(Graph6ParseError):
        decode_graph6("D" + chr(30) * 2)  # bytes below printable range
    with pytest.raises(Graph6ParseError):
        decode_graph6("")
    # nonzero padding bits after the last used column
    with pytest.raises(Graph6ParseError):
        decode_graph6("B" + chr(63 + 1))


def test_export_dot_mentions_every_edge():
    g = from_edges(4, [(0, 2), (1, 3)])
    dot = export_dot(g)
    assert "0 -- 2;" in dot and "1 -- 3;" in dot
    assert dot.count("--") == 2
