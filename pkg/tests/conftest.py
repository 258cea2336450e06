"""Shared helpers for the test suite."""

import random

import pytest

from hamconn.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi G(n, p) draw from a caller-owned generator."""
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows, validate=False)


def random_graph_min_degree(rng: random.Random, n: int, p: float, floor: int) -> Graph:
    """G(n, p) conditioned on min degree >= floor by top-up edges."""
    g = random_graph(rng, n, p)
    rows = list(g.rows)
    for v in range(n):
        while rows[v].bit_count() < floor:
            u = rng.randrange(n)
            if u != v and not (rows[v] >> u) & 1:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
    return Graph(n, rows, validate=False)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260823)
