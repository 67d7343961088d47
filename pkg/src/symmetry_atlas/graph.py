"""Finite simple undirected graphs on dense integer labels.

Adjacency is stored as one integer bitmask per vertex, which keeps the
hot enumeration kernels cheap and makes graphs hashable.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

INFINITE_GIRTH = math.inf


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_bits(mask: int) -> list[int]:
    """Return the set bit positions of ``mask`` in increasing order."""
    return list(_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_edges", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency length must equal n")
        self.n = n
        self.adj = tuple(adj)
        self._edges = None
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return from_edge_list(n, edges)

    # -- basic queries ------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __len__(self):
        return self.n

    @property
    def m(self) -> int:
        return len(self.edges())

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted pairs ``(u, v)`` with ``u < v``, lexicographic."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                for v in _bits(self.adj[u] >> (u + 1)):
                    out.append((u, u + 1 + v))
            self._edges = tuple(out)
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return iter_bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        if d is None or self.n == 0:
            return True
        return degs == {d}

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        new = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            new[a] |= 1 << b
            new[b] |= 1 << a
        return Graph(self.n, new)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from ``n`` and a sequence of vertex pairs.

    Duplicate pairs collapse. Raises ``ValueError`` for loops and
    out-of-range endpoints.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {e!r} out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return from_edge_list(off, edges)


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of ``g`` plus the edge list indexing its vertices.

    Vertex ``i`` of the result is the edge ``g.edges()[i]``; two vertices
    are adjacent iff the corresponding edges share an endvertex.
    """
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    adj = [0] * len(edges)
    for inc in incident:
        m = mask_of(inc)
        for i in inc:
            adj[i] |= m & ~(1 << i)
    return Graph(len(edges), adj), edges


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product; vertex ``(a, x)`` is numbered ``a * h.n + x``."""
    edges = []
    for a in range(g.n):
        for b in range(g.n):
            if a != b and not g.has_edge(a, b):
                continue
            for x in range(h.n):
                for y in range(h.n):
                    if x != y and not h.has_edge(x, y):
                        continue
                    p, q = a * h.n + x, b * h.n + y
                    if p < q:
                        edges.append((p, q))
    return from_edge_list(g.n * h.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(a, x)`` is numbered ``a * h.n + x``."""
    edges = []
    for a in range(g.n):
        for x, y in h.edges():
            edges.append((a * h.n + x, a * h.n + y))
    for a, b in g.edges():
        for x in range(h.n):
            edges.append((a * h.n + x, b * h.n + x))
    return from_edge_list(g.n * h.n, edges)


def cycle_power(length: int, k: int) -> Graph:
    """The ``k``-th power of the cycle ``C_length``."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if k < 1:
        raise ValueError("power must be positive")
    edges = []
    for i in range(length):
        for d in range(1, k + 1):
            j = (i + d) % length
            if j != i:
                edges.append((i, j))
    return from_edge_list(length, edges)


def circulant(n: int, connection: Iterable[int]) -> Graph:
    offsets = sorted(set(connection))
    for s in offsets:
        if not 1 <= s <= n // 2:
            raise ValueError(f"offset {s} out of range 1..{n // 2}")
    return from_edge_list(n, [(i, (i + s) % n) for i in range(n) for s in offsets])


def _check_partition(n: int, blocks: Sequence[Iterable[int]]) -> list[list[int]]:
    out = []
    seen = 0
    for b in blocks:
        b = sorted(set(b))
        if not b:
            raise ValueError("partition has an empty block")
        for v in b:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
        bm = mask_of(b)
        if bm & seen:
            raise ValueError("partition blocks overlap")
        seen |= bm
        out.append(b)
    if seen != (1 << n) - 1:
        raise ValueError("partition does not cover every vertex")
    return out


def contract_partition(g: Graph, blocks: Sequence[Iterable[int]]) -> Graph:
    """Contract every block to one vertex, keeping one edge per adjacent pair."""
    blocks = _check_partition(g.n, blocks)
    where = [0] * g.n
    for i, b in enumerate(blocks):
        for v in b:
            where[v] = i
    edges = {(min(where[u], where[v]), max(where[u], where[v]))
             for u, v in g.edges() if where[u] != where[v]}
    return from_edge_list(len(blocks), edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph, relabelled to ``0..k-1`` in increasing order."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return from_edge_list(len(vs), edges)


def components_mask(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced on the bitmask ``within``."""
    comps = []
    rest = within
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    return comps


def components(g: Graph) -> list[list[int]]:
    return [iter_bits(c) for c in components_mask(g.adj, g.vertex_mask())]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components_mask(g.adj, g.vertex_mask())) == 1


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees(), reverse=True)


def incident_edges(g: Graph, v: int) -> list[tuple[int, int]]:
    return [(min(v, u), max(v, u)) for u in g.neighbors(v)]


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INFINITE_GIRTH`` for forests."""
    best = INFINITE_GIRTH
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in _bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def to_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            text = str(labels[v]).replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
