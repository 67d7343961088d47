"""Named graphs and the cyclic families of bags.

Every family except triangle-bags is built on ``2 * length`` vertices
grouped into pairs ``P_t = {2t, 2t+1}``. Bag ``t`` is ``P_t | P_{t+1}``
and the adhesion set between bags ``t-1`` and ``t`` is ``P_t``. The
graph inside a bag is fixed by the bag type, except for bags whose
shape leaves a choice of matching between the two pairs; those choices
form the gluing scheme. Triangle-bags use bags ``{t, t+1, t+2}`` on
``length`` vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .connectivity import is_quasi_4_connected
from .graph import (
    Graph,
    cartesian_product,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    cycle_power,
    from_edge_list,
    line_graph,
)
from .symmetry import canonical_form, is_isomorphic

K4_BAGS = "cycle-of-K4-bags"
ALT_K4_C4 = "alt-K4-C4"
TRIANGLE_BAGS = "triangle-bags"
ALT_K22_C4 = "alt-K22-C4torsos"
C4_BAGS = "cycle-of-C4-bags"
K22_BAGS = "cycle-of-K22-bags"
LINE_GRAPH_CUBE = "line-graph-cube"

FAMILIES = (K4_BAGS, ALT_K4_C4, TRIANGLE_BAGS, ALT_K22_C4, C4_BAGS, K22_BAGS)
DEFAULT_MAX_LENGTH = 16

# bag types: "K4" complete, "K22" complete bipartite between the pairs,
# "C4" pair edges plus a matching, "M" a bare matching (C4 torso)
_BAG_TYPES = {
    K4_BAGS: ("K4",),
    ALT_K4_C4: ("K4", "C4"),
    ALT_K22_C4: ("K22", "M"),
    C4_BAGS: ("C4",),
    K22_BAGS: ("K22",),
}
_CHOICE_TYPES = ("C4", "M")


# -- named graphs -------------------------------------------------------

def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, edges)


def cube() -> Graph:
    return from_edge_list(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def octahedron() -> Graph:
    return from_edge_list(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3])


def prism(length: int) -> Graph:
    return cartesian_product(cycle(length), complete(2))


def moebius(length: int) -> Graph:
    """Moebius ladder with ``length`` rungs, as ``circulant(2 length, {1, length})``."""
    if length < 2:
        raise ValueError("a Moebius ladder needs at least 2 rungs")
    return circulant(2 * length, [1, length])


def dodecahedron() -> Graph:
    lcf = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4] * 2
    n = 20
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + s) % n) for i, s in enumerate(lcf)]
    return from_edge_list(n, edges)


def line_graph_cube() -> Graph:
    return line_graph(cube())[0]


def k3_box_k2() -> Graph:
    return prism(3)


_FIXED = {
    "cube": cube,
    "q3": cube,
    "octahedron": octahedron,
    "petersen": petersen,
    "dodecahedron": dodecahedron,
    "line_graph_cube": line_graph_cube,
    "line-graph-cube": line_graph_cube,
    "k3xk2": k3_box_k2,
    "k3□k2": k3_box_k2,
    "k3_box_k2": k3_box_k2,
    "wagner": lambda: moebius(4),
}


def named(name: str, *params: int) -> Graph:
    """Named graph by key, e.g. ``named("prism", 5)`` or ``named("K3,3")``."""
    key = name.strip().lower()
    if key in _FIXED and not params:
        return _FIXED[key]()
    if key == "complete" and len(params) == 1:
        return complete(params[0])
    if key == "cycle" and len(params) == 1:
        return cycle(params[0])
    if key == "complete_bipartite" and len(params) == 2:
        return complete_bipartite(*params)
    if key == "prism" and len(params) == 1:
        return prism(params[0])
    if key in ("moebius", "mobius", "möbius") and len(params) == 1:
        return moebius(params[0])
    m = re.fullmatch(r"k(\d+),(\d+)", key)
    if m and not params:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"([kc])(\d+)", key)
    if m and not params:
        k = int(m.group(2))
        return complete(k) if m.group(1) == "k" else cycle(k)
    m = re.fullmatch(r"(prism|moebius|mobius)\((\d+)\)", key)
    if m and not params:
        return named(m.group(1), int(m.group(2)))
    raise ValueError(f"unknown named graph {name!r}")


NAMED_KEYS = ("cube", "octahedron", "petersen", "dodecahedron", "line_graph_cube",
              "k3xk2", "wagner", "K<n>", "C<n>", "K<m>,<n>", "prism(<l>)", "moebius(<l>)")


# -- decompositions -----------------------------------------------------

@dataclass(frozen=True)
class CycleDecomposition:
    """Bags along a cycle; bag ``t`` is adjacent to bags ``t - 1`` and ``t + 1``."""

    bags: tuple

    @property
    def length(self) -> int:
        return len(self.bags)

    def adhesion(self, t: int) -> frozenset:
        """Adhesion set between bag ``t`` and bag ``t + 1``."""
        return self.bags[t] & self.bags[(t + 1) % self.length]

    def relabel(self, perm) -> "CycleDecomposition":
        return CycleDecomposition(tuple(frozenset(perm[v] for v in b) for b in self.bags))

    def to_json(self) -> dict:
        return {"length": self.length, "bags": [sorted(b) for b in self.bags]}


@dataclass(frozen=True)
class CyclePartition:
    """Disjoint bags along a cycle; edges stay inside a bag or join consecutive bags."""

    bags: tuple

    @property
    def length(self) -> int:
        return len(self.bags)

    def adhesion_edges(self, g: Graph, t: int) -> tuple:
        a, b = self.bags[t], self.bags[(t + 1) % self.length]
        return tuple(e for e in g.edges() if (e[0] in a and e[1] in b) or (e[0] in b and e[1] in a))


def is_cycle_partition(g: Graph, cp: CyclePartition) -> bool:
    where = {}
    for t, bag in enumerate(cp.bags):
        for v in bag:
            if v in where:
                return False
            where[v] = t
    if len(where) != g.n or cp.length < 3:
        return False
    ell = cp.length
    for u, v in g.edges():
        d = (where[u] - where[v]) % ell
        if d not in (0, 1, ell - 1):
            return False
    return True


@dataclass(frozen=True)
class FamilyMatch:
    family: str
    length: int
    scheme: int
    witness: CycleDecomposition | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        out = {"family": self.family, "length": self.length, "scheme": self.scheme}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def _bag_graph(g: Graph, bag) -> tuple[int, list[int]]:
    vs = sorted(bag)
    m = sum(1 for i, u in enumerate(vs) for v in vs[i + 1:] if g.has_edge(u, v))
    degs = [sum(1 for v in vs if v != u and g.has_edge(u, v)) for u in vs]
    return m, degs


def _is_k4(g, bag, extra=()):
    vs = sorted(bag)
    if len(vs) != 4:
        return False
    es = {(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if g.has_edge(u, v)}
    es |= {tuple(sorted(e)) for e in extra}
    return len(es) == 6


def _is_c4(g, bag, extra=()):
    vs = sorted(bag)
    if len(vs) != 4:
        return False
    es = {(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if g.has_edge(u, v)}
    es |= {tuple(sorted(e)) for e in extra}
    if len(es) != 4:
        return False
    deg = {v: 0 for v in vs}
    for u, v in es:
        deg[u] += 1
        deg[v] += 1
    return all(d == 2 for d in deg.values())


def _is_triangle(g, bag):
    vs = sorted(bag)
    return len(vs) == 3 and all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def _torso_extra(d: CycleDecomposition, t: int):
    ell = d.length
    out = []
    for s in ((t - 1) % ell, t):
        a = sorted(d.adhesion(s))
        if len(a) == 2:
            out.append((a[0], a[1]))
    return out


def check_decomposition(g: Graph, d: CycleDecomposition) -> list[str]:
    """Structural problems with ``d`` as a cycle-decomposition of ``g``."""
    problems = []
    ell = d.length
    if ell < 3:
        problems.append("cycle length below 3")
        return problems
    covered = set().union(*d.bags)
    if covered != set(range(g.n)):
        problems.append("bags do not cover every vertex")
    for u, v in g.edges():
        if not any(u in b and v in b for b in d.bags):
            problems.append(f"edge {(u, v)} lies in no bag")
            break
    for t in range(ell):
        if len(d.adhesion(t)) != 2:
            problems.append(f"adhesion set {t} has size {len(d.adhesion(t))}")
    for v in range(g.n):
        nodes = [t for t in range(ell) if v in d.bags[t]]
        if not nodes or len(nodes) == ell:
            continue
        # nodes must form one arc of the cycle
        starts = [t for t in nodes if (t - 1) % ell not in nodes]
        if len(starts) != 1:
            problems.append(f"bags containing vertex {v} are not consecutive")
    return problems


def _adhesions_disjoint(d: CycleDecomposition) -> bool:
    seen = set()
    for t in range(d.length):
        a = d.adhesion(t)
        if seen & a:
            return False
        seen |= a
    return True


def _alternates(flags) -> bool:
    ell = len(flags)
    if ell % 2:
        return False
    return all(flags[t] != flags[(t + 1) % ell] for t in range(ell))


def check_family_axioms(g: Graph, d: CycleDecomposition, family: str) -> tuple[bool, list[str]]:
    """Validate ``d`` as a witness that ``g`` belongs to ``family``.

    Returns ``(ok, problems)``.
    """
    problems = check_decomposition(g, d)
    if not is_quasi_4_connected(g):
        problems.append("graph is not quasi-4-connected")
    ell = d.length
    bags = d.bags
    if family == K4_BAGS:
        if not all(_is_k4(g, b) for b in bags):
            problems.append("a bag is not K4")
        if not _adhesions_disjoint(d):
            problems.append("adhesion sets are not disjoint")
    elif family == ALT_K4_C4:
        k4 = [_is_k4(g, b) for b in bags]
        c4 = [_is_c4(g, b) for b in bags]
        if not all(a or b for a, b in zip(k4, c4)) or not _alternates(k4):
            problems.append("bags do not alternate between K4 and C4")
        if not _adhesions_disjoint(d):
            problems.append("adhesion sets are not disjoint")
    elif family == TRIANGLE_BAGS:
        if not all(_is_triangle(g, b) for b in bags):
            problems.append("a bag is not a triangle")
        for s in range(ell):
            for t in range(s + 1, ell):
                if (t - s) % ell in (1, ell - 1):
                    continue
                if d.adhesion(s) & d.adhesion(t):
                    problems.append(f"non-consecutive adhesion sets {s},{t} meet")
    elif family == ALT_K22_C4:
        k4 = [_is_k4(g, b, _torso_extra(d, t)) for t, b in enumerate(bags)]
        c4 = [_is_c4(g, b, _torso_extra(d, t)) for t, b in enumerate(bags)]
        if not all(a or b for a, b in zip(k4, c4)) or not _alternates(k4):
            problems.append("torsos do not alternate between K4 and C4")
        if any(g.has_edge(*sorted(d.adhesion(t))) for t in range(ell) if len(d.adhesion(t)) == 2):
            problems.append("an adhesion set is not independent")
        if not _adhesions_disjoint(d):
            problems.append("adhesion sets are not disjoint")
    elif family == C4_BAGS:
        if not all(_is_c4(g, b) for b in bags):
            problems.append("a bag is not C4")
        if not all(len(d.adhesion(t)) == 2 and g.has_edge(*sorted(d.adhesion(t))) for t in range(ell)):
            problems.append("an adhesion set does not induce K2")
        if not _adhesions_disjoint(d):
            problems.append("adhesion sets are not disjoint")
    elif family == K22_BAGS:
        if not all(_is_c4(g, b) for b in bags):
            problems.append("a bag is not K22")
        if not all(_is_k4(g, b, _torso_extra(d, t)) for t, b in enumerate(bags)):
            problems.append("a torso is not K4")
        if not _adhesions_disjoint(d):
            problems.append("adhesion sets are not disjoint")
    else:
        raise ValueError(f"unknown family {family!r}")
    return (not problems, problems)


# -- construction -------------------------------------------------------

def feasible(family: str, length: int) -> bool:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == TRIANGLE_BAGS:
        return length >= 4
    if family in (ALT_K4_C4, ALT_K22_C4):
        return length >= 4 and length % 2 == 0
    return length >= 3


def vertex_count(family: str, length: int) -> int:
    return length if family == TRIANGLE_BAGS else 2 * length


def bag_types(family: str, length: int) -> list[str]:
    cyc = _BAG_TYPES[family]
    return [cyc[t % len(cyc)] for t in range(length)]


def build(family: str, length: int, scheme=None) -> tuple[Graph, CycleDecomposition]:
    """One gluing of the family; ``scheme`` holds one bit per matching bag."""
    if not feasible(family, length):
        raise ValueError(f"length {length} is infeasible for {family}")
    if family == TRIANGLE_BAGS:
        g = cycle_power(length, 2)
        bags = tuple(frozenset({t, (t + 1) % length, (t + 2) % length}) for t in range(length))
        return g, CycleDecomposition(bags)
    types = bag_types(family, length)
    slots = [t for t, k in enumerate(types) if k in _CHOICE_TYPES]
    scheme = tuple(scheme) if scheme is not None else (0,) * len(slots)
    if len(scheme) != len(slots):
        raise ValueError(f"scheme needs {len(slots)} bits")
    twist = dict(zip(slots, scheme))
    edges = []
    for t, kind in enumerate(types):
        a0, a1 = 2 * t, 2 * t + 1
        s = (t + 1) % length
        b0, b1 = 2 * s, 2 * s + 1
        if kind == "K4":
            edges += [(a0, a1), (b0, b1), (a0, b0), (a0, b1), (a1, b0), (a1, b1)]
        elif kind == "K22":
            edges += [(a0, b0), (a0, b1), (a1, b0), (a1, b1)]
        else:
            if kind == "C4":
                edges += [(a0, a1), (b0, b1)]
            if twist[t]:
                edges += [(a0, b1), (a1, b0)]
            else:
                edges += [(a0, b0), (a1, b1)]
    g = from_edge_list(2 * length, edges)
    bags = tuple(frozenset({2 * t, 2 * t + 1, 2 * ((t + 1) % length), 2 * ((t + 1) % length) + 1})
                 for t in range(length))
    return g, CycleDecomposition(bags)


def _gauge_basis(family: str, length: int) -> list[int]:
    """Scheme flips realised by swapping the two vertices of one pair.

    Swapping ``P_t`` toggles the matching of every choice bag that meets
    ``P_t``; the other bag types are symmetric under the swap.
    """
    types = bag_types(family, length)
    slots = [t for t, k in enumerate(types) if k in _CHOICE_TYPES]
    pos = {t: i for i, t in enumerate(slots)}
    vecs = []
    for p in range(length):
        v = 0
        for t in ((p - 1) % length, p):
            if t in pos:
                v ^= 1 << pos[t]
        if v:
            vecs.append(v)
    basis: list[int] = []
    for v in vecs:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def _reduce(bits: int, basis) -> int:
    for b in basis:
        bits = min(bits, bits ^ b)
    return bits


def gluing_schemes(family: str, length: int, reduce: bool = True) -> list[tuple[int, ...]]:
    """All schemes, or one representative per relabelling class when ``reduce``."""
    if family == TRIANGLE_BAGS:
        return [()]
    k = sum(1 for t in bag_types(family, length) if t in _CHOICE_TYPES)
    if not reduce:
        return list(product((0, 1), repeat=k))
    basis = _gauge_basis(family, length)
    reps = sorted({_reduce(x, basis) for x in range(1 << k)})
    return [tuple(r >> i & 1 for i in range(k)) for r in reps]


@lru_cache(maxsize=512)
def _construct_all(family: str, length: int, reduce: bool):
    out = {}
    for idx, scheme in enumerate(gluing_schemes(family, length, reduce)):
        g, d = build(family, length, scheme)
        ok, _ = check_family_axioms(g, d, family)
        if not ok:
            continue
        key = canonical_form(g).graph
        if key not in out:
            out[key] = (g, d, idx)
    return tuple(out.values())


def construct_all(family: str, length: int, reduce: bool = True) -> list[tuple[Graph, CycleDecomposition]]:
    """Pairwise non-isomorphic members of the family at this length."""
    return [(g, d) for g, d, _ in _construct_all(family, length, reduce)]


def recognize(g: Graph, max_length: int = DEFAULT_MAX_LENGTH) -> set[FamilyMatch]:
    """Family memberships of ``g`` found by comparison with ``construct_all``."""
    out = set()
    if g.n == 0:
        return out
    degs = sorted(g.degrees())
    for fam in FAMILIES:
        ell = g.n if fam == TRIANGLE_BAGS else g.n // 2
        if fam != TRIANGLE_BAGS and g.n % 2:
            continue
        if ell > max_length or not feasible(fam, ell):
            continue
        for h, d, idx in _construct_all(fam, ell, True):
            if sorted(h.degrees()) != degs or h.m != g.m:
                continue
            phi = is_isomorphic(h, g)
            if phi is not None:
                out.add(FamilyMatch(fam, ell, idx, d.relabel(phi)))
    if g.n == 12 and g.m == 24 and is_isomorphic(g, line_graph_cube()) is not None:
        out.add(FamilyMatch(LINE_GRAPH_CUBE, 0, 0, None))
    return out
