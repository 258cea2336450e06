"""Compact undirected simple graphs as bitset adjacency rows.

A Graph stores one Python int per vertex; bit u of row v is set iff u and v
are adjacent.  Values are immutable: every operation returns a new Graph.
Arbitrary-width rows allow large orders for formula work; the exact
subset-DP oracles enforce their own much smaller caps.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapacityError, Graph6ParseError, ParameterError

# Soft cap on explicit graph construction; formula-only code paths have no
# graph at all and are unaffected.
MAX_VERTICES = 4096

# Largest order that fits a single machine word per row (used by the
# jitted kernels; bit 63 stays clear so int64 arithmetic is safe).
WORD_VERTICES = 63


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int], validate: bool = True):
        if n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(f"order {n} exceeds representation cap {MAX_VERTICES}")
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise ParameterError(f"expected {n} adjacency rows, got {len(rows)}")
        if validate:
            for v, row in enumerate(rows):
                if row < 0:
                    raise ParameterError(f"row {v} is negative")
                if row >> n:
                    raise ParameterError(f"row {v} has bits beyond vertex {n - 1}")
                if (row >> v) & 1:
                    raise ParameterError(f"self-loop at vertex {v}")
            for u in range(n):
                for v in range(u + 1, n):
                    if ((rows[u] >> v) & 1) != ((rows[v] >> u) & 1):
                        raise ParameterError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    def to_bitrows(self) -> np.ndarray:
        """Adjacency as an int64 array, one word per row (kernels' format)."""
        if self.n > WORD_VERTICES:
            raise CapacityError(
                f"order {self.n} exceeds single-word cap {WORD_VERTICES}"
            )
        return np.array(self.rows, dtype=np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={edge_count(self)})"


def bits_of(mask: int) -> list[int]:
    """Indices of the set bits of `mask`, ascending."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


# ---------------------------------------------------------------------------
# constructors and combinators
# ---------------------------------------------------------------------------

def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ParameterError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, validate=False)


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ParameterError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds representation cap {MAX_VERTICES}")
    return Graph(n, [0] * n, validate=False)


def complete(n: int) -> Graph:
    if n < 0:
        raise ParameterError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds representation cap {MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)], validate=False)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(
        g.n, [(full & ~row) & ~(1 << v) for v, row in enumerate(g.rows)], validate=False
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g's vertices keep their labels; h's are shifted up by |g|."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"combined order {n} exceeds representation cap {MAX_VERTICES}")
    rows = list(g.rows) + [row << g.n for row in h.rows]
    return Graph(n, rows, validate=False)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"combined order {n} exceeds representation cap {MAX_VERTICES}")
    left_mask = (1 << g.n) - 1
    right_mask = ((1 << h.n) - 1) << g.n
    rows = [row | right_mask for row in g.rows]
    rows += [(row << g.n) | left_mask for row in h.rows]
    return Graph(n, rows, validate=False)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ParameterError(f"self-loop at vertex {u}")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, rows, validate=False)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, rows, validate=False)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on `vertices`, relabelled 0..k-1 in the given order."""
    verts = list(vertices)
    index = {v: i for i, v in enumerate(verts)}
    if len(index) != len(verts):
        raise ParameterError("duplicate vertices in induced subgraph")
    rows = [0] * len(verts)
    for i, v in enumerate(verts):
        row = g.rows[v]
        for u, j in index.items():
            if (row >> u) & 1:
                rows[i] |= 1 << j
    return Graph(len(verts), rows, validate=False)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph with vertex order[i] renamed to i."""
    if sorted(order) != list(range(g.n)):
        raise ParameterError("relabelling must be a permutation of the vertices")
    return induced_subgraph(g, order)


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------

def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Vertex degrees sorted nondecreasingly."""
    return tuple(sorted(row.bit_count() for row in g.rows))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ParameterError("minimum degree of the empty vertex set is undefined")
    return min(row.bit_count() for row in g.rows)


def edge_count(g: Graph) -> int:
    return sum(row.bit_count() for row in g.rows) // 2


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a lowest-degree vertex (lowest index on ties)."""
    rows = list(g.rows)
    alive = list(range(g.n))
    order = []
    while alive:
        v = min(alive, key=lambda x: (rows[x].bit_count(), x))
        order.append(v)
        alive.remove(v)
        bit = 1 << v
        for u in alive:
            rows[u] &= ~bit
    return order


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    """Vertex partition into components, each sorted, ordered by minimum."""
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits_of(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(bits_of(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Internally disjoint s-t paths for nonadjacent s, t (unit-capacity flow).

    Vertex v splits into v_in = 2v and v_out = 2v + 1 with an internal
    unit arc; edges become arcs of unlimited effective capacity (unit is
    enough for vertex-disjointness).
    """
    n = g.n
    size = 2 * n
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1
    for u in range(n):
        for v in bits_of(g.rows[u]):
            cap[(2 * u + 1, 2 * v)] = 1
    source, sink = 2 * s + 1, 2 * t
    adj: list[list[int]] = [[] for _ in range(size)]
    for a, b in cap:
        adj[a].append(b)
        adj[b].append(a)

    flow = 0
    while True:
        parent = [-1] * size
        parent[source] = source
        queue = deque([source])
        while queue:
            a = queue.popleft()
            if a == sink:
                break
            for b in adj[a]:
                if parent[b] < 0 and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if parent[sink] < 0:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] = cap.get((a, b), 0) - 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; n-1 for complete graphs by convention."""
    n = g.n
    if n == 0:
        raise ParameterError("vertex connectivity needs at least one vertex")
    if n == 1:
        return 0
    if edge_count(g) == n * (n - 1) // 2:
        return n - 1
    if not is_connected(g):
        return 0
    # Even's reduction: fix a minimum-degree vertex v; a minimum cut either
    # misses v (then it separates v from some non-neighbor) or contains v
    # (then it separates two nonadjacent neighbors of v).
    v = min(range(n), key=g.degree)
    best = n - 1
    for u in range(n):
        if u != v and not g.has_edge(u, v):
            best = min(best, _max_vertex_disjoint_paths(g, v, u))
    nbrs = bits_of(g.rows[v])
    for x, y in itertools.combinations(nbrs, 2):
        if not g.has_edge(x, y):
            best = min(best, _max_vertex_disjoint_paths(g, x, y))
    return best


# ---------------------------------------------------------------------------
# graph6 / DOT serialization
# ---------------------------------------------------------------------------

def triangle_bit_pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 order: (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > 68719476735:  # 2^36 - 1, format limit
        raise CapacityError("graph6 encodes orders below 2^36 only")
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        header = chr(126) * 2 + "".join(
            chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)
        )
    bits = []
    for i, j in triangle_bit_pairs(n):
        bits.append((g.rows[j] >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return header + "".join(chunks)


def decode_graph6(data: str | bytes) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("ascii")
    data = data.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)

    def val(pos: int) -> int:
        c = ord(data[pos])
        if not 63 <= c <= 126:
            raise Graph6ParseError(f"character {data[pos]!r} outside graph6 range", pos)
        return c - 63

    pos = 0
    if val(0) < 63:
        n = val(0)
        pos = 1
    elif len(data) >= 2 and val(1) < 63:
        if len(data) < 4:
            raise Graph6ParseError("truncated 3-byte order field", len(data))
        n = (val(1) << 12) | (val(2) << 6) | val(3)
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6ParseError("truncated 6-byte order field", len(data))
        n = 0
        for k in range(2, 8):
            n = (n << 6) | val(k)
        pos = 8
    if n > MAX_VERTICES:
        raise CapacityError(f"decoded order {n} exceeds representation cap {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nchunks = (nbits + 5) // 6
    if len(data) - pos != nchunks:
        raise Graph6ParseError(
            f"expected {nchunks} payload characters for order {n}, got {len(data) - pos}",
            min(pos + nchunks, len(data)),
        )
    rows = [0] * n
    pairs = triangle_bit_pairs(n)
    for k in range(nchunks):
        chunk = val(pos + k)
        for b in range(6):
            idx = 6 * k + b
            bit = (chunk >> (5 - b)) & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6ParseError("nonzero padding bit", pos + k)
    return Graph(n, rows, validate=False)


def export_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
