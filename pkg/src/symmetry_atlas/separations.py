"""Mixed separations, tetra-cuts, tetra-separations and crossing diagrams.

A mixed separation ``(A, B)`` of ``G`` has ``A | B = V``. Its separator is
the vertex set ``A & B`` together with every edge running between the
strict sides ``A - B`` and ``B - A``; the order counts both kinds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernels
from .connectivity import is_k_connected
from .graph import Graph, components_mask, iter_bits, mask_of


def _strict_key(mask):
    return tuple(iter_bits(mask))


@dataclass(frozen=True, eq=False)
class MixedSeparation:
    """Sides as vertex bitmasks plus the separator edges they induce.

    Equality and hashing ignore orientation: ``(A, B)`` equals ``(B, A)``.
    ``a_mask``/``b_mask`` hold the orientation they were built with; use
    :meth:`canonical` for the one with the lexicographically smaller strict
    side first.
    """

    n: int
    a_mask: int
    b_mask: int
    edges: tuple = field(default=())

    def _key(self):
        x, y = self.a_mask, self.b_mask
        return (self.n, min(x, y), max(x, y))

    def __eq__(self, other):
        if not isinstance(other, MixedSeparation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def sep_mask(self) -> int:
        return self.a_mask & self.b_mask

    @property
    def A(self) -> frozenset:
        return frozenset(iter_bits(self.a_mask))

    @property
    def B(self) -> frozenset:
        return frozenset(iter_bits(self.b_mask))

    @property
    def separator_vertices(self) -> frozenset:
        return frozenset(iter_bits(self.sep_mask))

    @property
    def strict_a(self) -> int:
        return self.a_mask & ~self.b_mask

    @property
    def strict_b(self) -> int:
        return self.b_mask & ~self.a_mask

    @property
    def order(self) -> int:
        return self.sep_mask.bit_count() + len(self.edges)

    @property
    def is_genuine(self) -> bool:
        return not self.edges

    def flip(self) -> "MixedSeparation":
        return type(self)(self.n, self.b_mask, self.a_mask, self.edges)

    def canonical(self) -> "MixedSeparation":
        if _strict_key(self.strict_a) <= _strict_key(self.strict_b):
            return self
        return self.flip()

    def to_json(self) -> dict:
        c = self.canonical()
        return {
            "sideA": iter_bits(c.a_mask),
            "sideB": iter_bits(c.b_mask),
            "separatorVertices": iter_bits(c.sep_mask),
            "separatorEdges": [list(e) for e in c.edges],
        }

    def __repr__(self):
        c = self.canonical()
        return (f"{type(self).__name__}(A={iter_bits(c.a_mask)}, B={iter_bits(c.b_mask)}, "
                f"edges={list(c.edges)})")


class EdgeCut(MixedSeparation):
    """A bipartition of ``V``; the separator consists of the crossing edges."""

    @property
    def cut_edges(self) -> tuple:
        return self.edges


def _crossing_edges(g: Graph, sa: int, sb: int) -> tuple:
    return tuple((u, v) for u, v in g.edges()
                 if (sa >> u & 1 and sb >> v & 1) or (sb >> u & 1 and sa >> v & 1))


def make_mixed_separation(g: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> MixedSeparation:
    a, b = mask_of(side_a), mask_of(side_b)
    return _from_masks(g, a, b)


def _from_masks(g: Graph, a: int, b: int, cls=MixedSeparation) -> MixedSeparation:
    full = g.vertex_mask()
    if (a | b) != full or (a | b) & ~full:
        raise ValueError("sides must cover exactly the vertex set")
    sa, sb = a & ~b, b & ~a
    if not sa or not sb:
        raise ValueError("improper separation: a strict side is empty")
    return cls(g.n, a, b, _crossing_edges(g, sa, sb))


def make_edge_cut(g: Graph, side_a: Iterable[int]) -> EdgeCut:
    a = mask_of(side_a)
    return _from_masks(g, a, g.vertex_mask() & ~a, EdgeCut)


def matching_condition(s: MixedSeparation) -> bool:
    used = s.sep_mask
    for u, v in s.edges:
        em = (1 << u) | (1 << v)
        if used & em:
            return False
        used |= em
    return True


def degree_condition(g: Graph, s: MixedSeparation) -> bool:
    sa, sb = s.strict_a, s.strict_b
    for v in iter_bits(s.sep_mask):
        if (g.adj[v] & sa).bit_count() < 2 or (g.adj[v] & sb).bit_count() < 2:
            return False
    return True


def is_tetra_separation(g: Graph, s: MixedSeparation) -> bool:
    if s.n != g.n or s.order != 4:
        return False
    if not s.strict_a or not s.strict_b:
        return False
    return matching_condition(s) and degree_condition(g, s)


def is_tetra_cut(g: Graph, s: MixedSeparation) -> bool:
    return (s.n == g.n and not s.sep_mask and len(s.edges) == 4
            and bool(s.strict_a) and bool(s.strict_b) and matching_condition(s))


def _two_colourings(comps, F, eu, ev):
    """Splits of the components making every edge in ``F`` cross.

    Yields ``(left_mask, right_mask)`` once per unordered split with both
    sides nonempty.
    """
    c = len(comps)
    where = {}
    for i, cm in enumerate(comps):
        for v in iter_bits(cm):
            where[v] = i
    nbrs: list[list[int]] = [[] for _ in range(c)]
    for e in F:
        x, y = where[eu[e]], where[ev[e]]
        nbrs[x].append(y)
        nbrs[y].append(x)
    colour = [-1] * c
    pieces = []
    for s in range(c):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        members = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    members.append(y)
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return
        pieces.append(members)
    p = len(pieces)
    for code in range(1 << (p - 1)):
        left = right = 0
        for k, members in enumerate(pieces):
            flip = code >> k & 1 if k < p - 1 else 0
            for x in members:
                if colour[x] ^ flip:
                    right |= comps[x]
                else:
                    left |= comps[x]
        if left and right:
            yield left, right


def _shape_separations(g: Graph, j: int, f: int, cls=MixedSeparation):
    edges = g.edges()
    eu = [u for u, _ in edges]
    ev = [v for _, v in edges]
    full = g.vertex_mask()
    out = set()
    for sm, F in kernels.mixed_separators(g.adj, eu, ev, j, f, True):
        rest = full & ~sm
        cut = list(g.adj)
        for e in F:
            cut[eu[e]] &= ~(1 << ev[e])
            cut[ev[e]] &= ~(1 << eu[e])
        comps = components_mask(cut, rest)
        for left, right in _two_colourings(comps, F, eu, ev):
            s = cls(g.n, left | sm, right | sm, tuple(edges[e] for e in F))
            out.add(s.canonical())
    return out


@lru_cache(maxsize=1024)
def _tetra_separations(g: Graph) -> frozenset:
    out = set()
    for j in range(5):
        for s in _shape_separations(g, j, 4 - j):
            if degree_condition(g, s):
                out.add(s)
    return frozenset(out)


def enumerate_tetra_separations(g: Graph) -> set[MixedSeparation]:
    return set(_tetra_separations(g))


@lru_cache(maxsize=1024)
def _tetra_cuts(g: Graph) -> frozenset:
    return frozenset(_shape_separations(g, 0, 4, EdgeCut))


def enumerate_tetra_cuts(g: Graph) -> set[EdgeCut]:
    return set(_tetra_cuts(g))


def enumerate_edge_cuts(g: Graph, k: int, matching: bool = False) -> set[EdgeCut]:
    """All bipartitions with exactly ``k`` crossing edges."""
    edges = g.edges()
    eu = [u for u, _ in edges]
    ev = [v for _, v in edges]
    out = set()
    for sm, F in kernels.mixed_separators(g.adj, eu, ev, 0, k, matching):
        cut = list(g.adj)
        for e in F:
            cut[eu[e]] &= ~(1 << ev[e])
            cut[ev[e]] &= ~(1 << eu[e])
        comps = components_mask(cut, g.vertex_mask())
        for left, right in _two_colourings(comps, F, eu, ev):
            out.add(EdgeCut(g.n, left, right, tuple(edges[e] for e in F)).canonical())
    return out


def _check_host(s1, s2):
    if s1.n != s2.n:
        raise ValueError("separations live in different graphs")


def leq(s1: MixedSeparation, s2: MixedSeparation) -> bool:
    _check_host(s1, s2)
    return (s1.a_mask & ~s2.a_mask) == 0 and (s2.b_mask & ~s1.b_mask) == 0


def is_nested(s1: MixedSeparation, s2: MixedSeparation) -> bool:
    _check_host(s1, s2)
    f1, f2 = s1.flip(), s2.flip()
    return leq(s1, s2) or leq(s1, f2) or leq(f1, s2) or leq(f1, f2)


def is_totally_nested(g: Graph, s: MixedSeparation, against: str = "auto") -> bool:
    """Nested with every tetra-cut (edge cuts) or tetra-separation (otherwise)."""
    if s.n != g.n:
        raise ValueError("separation does not belong to this graph")
    if against == "auto":
        against = "cuts" if isinstance(s, EdgeCut) else "separations"
    pool = _tetra_cuts(g) if against == "cuts" else _tetra_separations(g)
    return all(is_nested(s, t) for t in pool)


@dataclass(frozen=True)
class CrossingDiagram:
    """Corners, links and centre of two crossing separations.

    Corners are vertex masks keyed ``"AC"``, ``"AD"``, ``"BC"``, ``"BD"``.
    Link ``"C"`` holds the part of the first separator inside ``C``,
    link ``"A"`` the part of the second separator inside ``A``, and so
    on. Each link and the centre is a ``(vertices, edges)`` pair.
    """

    corners: dict
    links: dict
    centre: tuple

    def link_sizes(self) -> dict:
        return {k: len(v[0]) + len(v[1]) for k, v in self.links.items()}

    @property
    def centre_size(self) -> int:
        return len(self.centre[0]) + len(self.centre[1])


def crossing_diagram(s1: MixedSeparation, s2: MixedSeparation) -> CrossingDiagram:
    if is_nested(s1, s2):
        raise ValueError("separations are nested, not crossing")
    A, B, C, D = s1.a_mask, s1.b_mask, s2.a_mask, s2.b_mask
    S1v, S2v = s1.sep_mask, s2.sep_mask
    E1, E2 = set(s1.edges), set(s2.edges)
    corners = {"AC": A & C, "AD": A & D, "BC": B & C, "BD": B & D}
    links = {k: ([], []) for k in "CDAB"}
    centre = ([], [])

    for v in iter_bits(S1v):
        if S2v >> v & 1:
            centre[0].append(v)
        else:
            links["C" if C >> v & 1 else "D"][0].append(v)
    for v in iter_bits(S2v & ~S1v):
        links["A" if A >> v & 1 else "B"][0].append(v)
    for e in sorted(E1):
        if e in E2:
            centre[1].append(e)
        elif C >> e[0] & 1 and C >> e[1] & 1:
            links["C"][1].append(e)
        else:
            links["D"][1].append(e)
    for e in sorted(E2 - E1):
        if A >> e[0] & 1 and A >> e[1] & 1:
            links["A"][1].append(e)
        else:
            links["B"][1].append(e)
    frozen = {k: (tuple(v[0]), tuple(v[1])) for k, v in links.items()}
    return CrossingDiagram(corners, frozen, (tuple(centre[0]), tuple(centre[1])))


def cut_to_line_separation(g: Graph, cut: MixedSeparation, line: Graph,
                           edge_index: Sequence[tuple[int, int]]) -> MixedSeparation:
    """Image of an edge cut of ``g`` as a genuine separation of ``L(g)``."""
    if cut.sep_mask:
        raise ValueError("expected an edge cut (no separator vertices)")
    A, B = cut.a_mask, cut.b_mask
    S = set(cut.edges)
    a2 = b2 = 0
    spans_a = spans_b = False
    for i, (u, v) in enumerate(edge_index):
        if (u, v) in S:
            a2 |= 1 << i
            b2 |= 1 << i
        elif A >> u & 1 and A >> v & 1:
            a2 |= 1 << i
            spans_a = True
        elif B >> u & 1 and B >> v & 1:
            b2 |= 1 << i
            spans_b = True
        else:
            raise ValueError(f"edge {(u, v)} crosses the cut but is not listed")
    if not spans_a or not spans_b:
        raise ValueError("a side of the cut spans no edge")
    return _from_masks(line, a2, b2)


def line_separation_to_cut(g: Graph, s: MixedSeparation,
                           edge_index: Sequence[tuple[int, int]]) -> MixedSeparation:
    """Preimage in ``g`` of a genuine separation of ``L(g)``."""
    if not s.is_genuine:
        raise ValueError("input must be a genuine separation of the line graph")
    inc = [0] * g.n
    for i, (u, v) in enumerate(edge_index):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    a = b = 0
    for v in range(g.n):
        if inc[v] & ~s.a_mask == 0:
            a |= 1 << v
        if inc[v] & ~s.b_mask == 0:
            b |= 1 << v
    sep = _from_masks(g, a, b)
    if not sep.sep_mask:
        return EdgeCut(sep.n, sep.a_mask, sep.b_mask, sep.edges)
    return sep


def _induces_k4(g: Graph, side: int) -> bool:
    if side.bit_count() != 4:
        return False
    return all((g.adj[v] & side).bit_count() == 3 for v in iter_bits(side))


def is_essentially_5_connected(g: Graph) -> bool:
    if not is_k_connected(g, 4):
        return False
    for s in _tetra_separations(g):
        if s.sep_mask:
            return False
        if not (_induces_k4(g, s.a_mask) or _induces_k4(g, s.b_mask)):
            return False
    return True


def brute_force_tetra_separations(g: Graph) -> set[MixedSeparation]:
    """Reference oracle: every ordered side pair, filtered by definition."""
    out = set()
    n = g.n
    full = g.vertex_mask()
    # each vertex is in A only, B only, or both
    for code in range(3 ** n):
        a = b = 0
        x = code
        for v in range(n):
            r = x % 3
            x //= 3
            if r != 1:
                a |= 1 << v
            if r != 0:
                b |= 1 << v
        if a | b != full or not (a & ~b) or not (b & ~a):
            continue
        s = MixedSeparation(n, a, b, _crossing_edges(g, a & ~b, b & ~a))
        if is_tetra_separation(g, s):
            out.add(s.canonical())
    return out


def brute_force_tetra_cuts(g: Graph) -> set[EdgeCut]:
    out = set()
    full = g.vertex_mask()
    for a in range(1, full):
        if a > (full & ~a):
            continue
        b = full & ~a
        s = EdgeCut(g.n, a, b, _crossing_edges(g, a, b))
        if is_tetra_cut(g, s):
            out.add(s.canonical())
    return out
