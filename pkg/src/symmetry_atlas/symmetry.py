"""Automorphism groups, orbits, transitivity and canonical forms.

Everything is built on individualization-refinement: colour refinement
to an equitable partition, then individualizing a vertex of the first
non-singleton cell and refining again until the colouring is discrete.

Automorphism groups are found as a stabilizer chain along the leftmost
path of the search tree. The group order is the product of the basic
orbit lengths. Canonical forms pick the minimum leaf over the search tree
with branches pruned by the automorphisms of each coloured node.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import kernels
from .graph import Graph
from .graph6 import emit_graph6

VERTICES = "vertices"
EDGES = "edges"
ARCS = "arcs"


def _individualize(col, v):
    new = [2 * c + 1 for c in col]
    new[v] = 2 * col[v]
    return new


def _target_cell(col):
    counts = [0] * (len(col) + 1)
    for c in col:
        counts[c] += 1
    for k, cnt in enumerate(counts):
        if cnt > 1:
            return k
    return -1


def _cell(col, k):
    return [v for v, c in enumerate(col) if c == k]


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def _vertex_uf(n, gens):
    uf = _UnionFind(n)
    for g in gens:
        for v in range(n):
            uf.union(v, g[v])
    return uf


def _is_automorphism(adj, perm):
    for v in range(len(adj)):
        img = 0
        a = adj[v]
        while a:
            low = a & -a
            img |= 1 << perm[low.bit_length() - 1]
            a ^= low
        if img != adj[perm[v]]:
            return False
    return True


class _Chain:
    """Stabilizer chain of a coloured graph along its leftmost search path."""

    def __init__(self, adj, colors):
        self.adj = adj
        self.n = len(adj)
        col, tr = kernels.refine(adj, colors)
        self.root = col
        self.cols = [col]
        self.traces = [tr]
        self.base = []
        while True:
            k = _target_cell(col)
            if k < 0:
                break
            b = _cell(col, k)[0]
            self.base.append(b)
            col, tr = kernels.refine(adj, _individualize(col, b))
            self.cols.append(col)
            self.traces.append(tr)
        self.depth = len(self.base)
        leaf = self.cols[-1]
        self._leaf_inv = [0] * self.n
        for v, c in enumerate(leaf):
            self._leaf_inv[c] = v
        self.level_gens: list[list[tuple[int, ...]]] = [[] for _ in range(self.depth)]
        self.orbit_sizes = [1] * self.depth
        found: list[tuple[int, ...]] = []
        for i in range(self.depth - 1, -1, -1):
            uf = _vertex_uf(self.n, found)
            b = self.base[i]
            for w in _cell(self.cols[i], self.cols[i][b]):
                if uf.find(w) == uf.find(b):
                    continue
                phi = self._search(i, w)
                if phi is not None:
                    self.level_gens[i].append(phi)
                    found.append(phi)
                    for v in range(self.n):
                        uf.union(v, phi[v])
            rb = uf.find(b)
            self.orbit_sizes[i] = sum(1 for v in range(self.n) if uf.find(v) == rb)

    def _search(self, i, w):
        col, tr = kernels.refine(self.adj, _individualize(self.cols[i], w))
        if tr != self.traces[i + 1]:
            return None
        return self._descend(i + 1, col)

    def _descend(self, j, col):
        if j == self.depth:
            # base leaf vertex y maps to the vertex carrying the same colour here
            perm = [0] * self.n
            inv = self._leaf_inv
            for x, c in enumerate(col):
                perm[inv[c]] = x
            root = self.root
            if any(root[perm[v]] != root[v] for v in range(self.n)):
                return None
            if _is_automorphism(self.adj, perm):
                return tuple(perm)
            return None
        k = _target_cell(col)
        for x in _cell(col, k):
            c2, t2 = kernels.refine(self.adj, _individualize(col, x))
            if t2 != self.traces[j + 1]:
                continue
            r = self._descend(j + 1, c2)
            if r is not None:
                return r
        return None

    def gens_from(self, level):
        out = []
        for i in range(level, self.depth):
            out.extend(self.level_gens[i])
        return out

    def order_from(self, level):
        order = 1
        for s in self.orbit_sizes[level:]:
            order *= s
        return order


class _ChainView:
    """The chain restricted to the levels at and below ``offset``."""

    def __init__(self, chain, offset):
        self.chain = chain
        self.offset = offset

    @property
    def base_point(self):
        return self.chain.base[self.offset]

    def gens(self):
        return self.chain.gens_from(self.offset)

    def child(self):
        return _ChainView(self.chain, self.offset + 1)


@dataclass(frozen=True)
class OrbitStructure:
    kind: str
    orbits: tuple

    def __len__(self):
        return len(self.orbits)

    def orbit_of(self, item):
        for orb in self.orbits:
            if item in orb:
                return orb
        raise KeyError(item)


class AutomorphismGroup:
    """Generators and exact order of the automorphism group of a graph.

    When ``colors`` were given the group is that of the coloured graph.
    """

    def __init__(self, graph: Graph, generators, order: int, base=(), orbit_sizes=()):
        self.graph = graph
        self.n = graph.n
        self.generators = tuple(tuple(g) for g in generators)
        self.order = order
        self.base = tuple(base)
        self.orbit_sizes = tuple(orbit_sizes)

    def __repr__(self):
        return f"AutomorphismGroup(n={self.n}, order={self.order}, gens={len(self.generators)})"

    def orbits(self, kind: str = VERTICES) -> OrbitStructure:
        g = self.graph
        if kind == VERTICES:
            items = list(range(self.n))

            def act(p, x):
                return p[x]
        elif kind == EDGES:
            items = list(g.edges())

            def act(p, e):
                a, b = p[e[0]], p[e[1]]
                return (a, b) if a < b else (b, a)
        elif kind == ARCS:
            items = [a for u, v in g.edges() for a in ((u, v), (v, u))]
            items.sort()

            def act(p, a):
                return (p[a[0]], p[a[1]])
        else:
            raise ValueError(f"unknown orbit kind {kind!r}")
        index = {x: i for i, x in enumerate(items)}
        uf = _UnionFind(len(items))
        for p in self.generators:
            for i, x in enumerate(items):
                uf.union(i, index[act(p, x)])
        groups: dict[int, list] = {}
        for i, x in enumerate(items):
            groups.setdefault(uf.find(i), []).append(x)
        orbs = sorted((tuple(sorted(v)) for v in groups.values()), key=lambda o: o[0])
        return OrbitStructure(kind, tuple(orbs))

    def elements(self, limit: int = 200000) -> list[tuple[int, ...]]:
        """All group elements by closure over the generators."""
        if self.order > limit:
            raise ValueError(f"group order {self.order} exceeds limit {limit}")
        ident = tuple(range(self.n))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for e in frontier:
                for gen in self.generators:
                    h = tuple(gen[x] for x in e)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return sorted(seen)


def automorphism_group_colored(g: Graph, colors: Sequence[int] | None = None) -> AutomorphismGroup:
    if g.n == 0:
        return AutomorphismGroup(g, [], 1)
    if colors is None:
        colors = [0] * g.n
    elif len(colors) != g.n:
        raise ValueError("colour list must have one entry per vertex")
    chain = _Chain(g.adj, list(colors))
    return AutomorphismGroup(g, chain.gens_from(0), chain.order_from(0),
                             chain.base, chain.orbit_sizes)


@lru_cache(maxsize=4096)
def automorphism_group(g: Graph) -> AutomorphismGroup:
    return automorphism_group_colored(g)


def orbits(group: AutomorphismGroup, kind: str = VERTICES) -> OrbitStructure:
    return group.orbits(kind)


def is_vertex_transitive(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(automorphism_group(g).orbits(VERTICES)) == 1


def is_edge_transitive(g: Graph) -> bool:
    if g.m == 0:
        return True
    return len(automorphism_group(g).orbits(EDGES)) == 1


def is_arc_transitive(g: Graph) -> bool:
    if g.m == 0:
        return True
    return len(automorphism_group(g).orbits(ARCS)) == 1


@dataclass(frozen=True)
class CanonicalForm:
    """``labeling[v]`` is the canonical label of vertex ``v``."""

    labeling: tuple
    graph: Graph

    @property
    def word(self) -> str:
        return emit_graph6(self.graph)


class _Canonizer:
    def __init__(self, adj):
        self.adj = adj
        self.n = len(adj)
        self.best_traces = None
        self.best_key = None
        self.best_col = None

    def _leaf_key(self, col):
        new = [0] * self.n
        adj = self.adj
        for v in range(self.n):
            m = 0
            a = adj[v]
            while a:
                low = a & -a
                m |= 1 << col[low.bit_length() - 1]
                a ^= low
            new[col[v]] = m
        return tuple(new)

    def visit(self, col, traces, view):
        if self.best_traces is not None:
            if traces > self.best_traces[:len(traces)]:
                return
        k = _target_cell(col)
        if k < 0:
            key = self._leaf_key(col)
            if (self.best_traces is None
                    or (traces, key) < (self.best_traces, self.best_key)):
                self.best_traces = list(traces)
                self.best_key = key
                self.best_col = list(col)
            return
        if view is None:
            view = _ChainView(_Chain(self.adj, col), 0)
        cell = _cell(col, k)
        uf = _vertex_uf(self.n, view.gens())
        reps = []
        seen = set()
        for v in cell:
            r = uf.find(v)
            if r not in seen:
                seen.add(r)
                reps.append(v)
        for v in reps:
            c2, t2 = kernels.refine(self.adj, _individualize(col, v))
            sub = view.child() if v == view.base_point else None
            self.visit(c2, traces + [t2], sub)


def canonical_form_colored(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    if g.n == 0:
        return CanonicalForm((), g)
    if colors is None:
        colors = [0] * g.n
    col, tr = kernels.refine(g.adj, list(colors))
    canon = _Canonizer(g.adj)
    canon.visit(col, [tr], None)
    labeling = tuple(canon.best_col)
    return CanonicalForm(labeling, Graph(g.n, canon.best_key))


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_form_colored(g)


def canonical_word(g: Graph) -> str:
    return canonical_form(g).word


def canonical_key(g: Graph):
    """Hashable isomorphism invariant usable for any ``n``."""
    return (g.n, canonical_form(g).graph.adj)


def is_isomorphic(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``u~v`` iff ``phi[u]~phi[v]``, or ``None``."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    cg, ch = canonical_form(g), canonical_form(h)
    if cg.graph != ch.graph:
        return None
    inv_h = [0] * h.n
    for v, c in enumerate(ch.labeling):
        inv_h[c] = v
    phi = [inv_h[cg.labeling[v]] for v in range(g.n)]
    for u, v in g.edges():
        if not h.has_edge(phi[u], phi[v]):
            raise AssertionError("canonical labelling produced a non-isomorphism")
    return phi
