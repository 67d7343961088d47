"""The built-in test corpus.

Named graphs, all connected circulants on at most 16 vertices, every
family construction up to length 10, clique- and C4-expansions of the
small regular members, and a handful of graphs that are not
vertex-transitive. Members are deduplicated up to isomorphism and kept
in a fixed order.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from . import families as fam
from .expansions import (
    C4,
    clique_expansion,
    enumerate_c4_expansions,
    h_expansion,
    k_expansion,
)
from .graph import (
    Graph,
    cartesian_product,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    from_edge_list,
    is_connected,
    path,
)
from .symmetry import canonical_form

MAX_CORPUS_N = 48
CIRCULANT_MAX_N = 16
FAMILY_MAX_LENGTH = 10
K3_BASE_MAX_N = 16
K4_BASE_MAX_N = 12


def _star(k: int) -> Graph:
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def _truncated_cube_vertex() -> Graph:
    """Cube with vertex 0 replaced by a triangle: cubic, one triangle, not VT."""
    g = fam.cube()
    nb = g.neighbors(0)
    edges = [(u, v) for u, v in g.edges() if 0 not in (u, v)]
    tri = [0, 8, 9]
    edges += [(0, 8), (8, 9), (0, 9)]
    edges += [(t, w) for t, w in zip(tri, nb)]
    return from_edge_list(10, edges)


def named_members() -> list[tuple[str, Graph]]:
    out = [("K1", complete(1)), ("K2", complete(2))]
    out += [(f"K{n}", complete(n)) for n in range(3, 9)]
    out += [(f"C{n}", cycle(n)) for n in range(4, 11)]
    out += [(f"K{a},{b}", complete_bipartite(a, b)) for a, b in ((3, 3), (4, 4), (5, 5))]
    out += [
        ("petersen", fam.petersen()),
        ("cube", fam.cube()),
        ("octahedron", fam.octahedron()),
        ("dodecahedron", fam.dodecahedron()),
        ("line_graph_cube", fam.line_graph_cube()),
        ("k3xk2", fam.k3_box_k2()),
        ("wagner", fam.moebius(4)),
        ("Q4", cartesian_product(fam.cube(), complete(2))),
    ]
    out += [(f"prism({l})", fam.prism(l)) for l in range(3, 9)]
    out += [(f"moebius({l})", fam.moebius(l)) for l in range(3, 9)]
    return out


def non_transitive_members() -> list[tuple[str, Graph]]:
    out = [(f"P{n}", path(n)) for n in (3, 4, 5)]
    out += [("star(3)", _star(3)), ("K2,3", complete_bipartite(2, 3))]
    out.append(("truncated-cube-vertex", _truncated_cube_vertex()))
    rng = random.Random(7)
    for name, base in (("cube", fam.cube()), ("K4", complete(4)), ("petersen", fam.petersen())):
        r = base.degree(0)
        ports = [rng.sample(range(r), r) for _ in range(base.n)]
        out.append((f"random-K{r - 1}-expansion({name})", h_expansion(base, C4 if r == 4 else complete(r), ports)))
    oct_ports = [rng.sample(range(4), 4) for _ in range(6)]
    out.append(("random-C4-expansion(octahedron)", h_expansion(fam.octahedron(), C4, oct_ports)))
    return out


def circulant_members(max_n: int = CIRCULANT_MAX_N) -> list[tuple[str, Graph]]:
    out = []
    for n in range(5, max_n + 1):
        half = list(range(1, n // 2 + 1))
        for k in range(1, len(half) + 1):
            for conn in combinations(half, k):
                g = circulant(n, conn)
                if is_connected(g):
                    out.append((f"circulant({n},{','.join(map(str, conn))})", g))
    return out


def family_members(max_length: int = FAMILY_MAX_LENGTH) -> list[tuple[str, Graph]]:
    out = []
    for family in fam.FAMILIES:
        for length in range(3, max_length + 1):
            if not fam.feasible(family, length):
                continue
            for i, (g, _) in enumerate(fam.construct_all(family, length)):
                out.append((f"{family}:{length}:{i}", g))
    return out


def expansion_members(bases: list[tuple[str, Graph]]) -> list[tuple[str, Graph]]:
    out = []
    for name, g in bases:
        if g.n == 0 or not is_connected(g):
            continue
        if g.is_regular(3) and g.n <= K3_BASE_MAX_N:
            out.append((f"K3-expansion({name})", clique_expansion(g)))
        elif g.is_regular(4) and g.n <= K4_BASE_MAX_N:
            out.append((f"K4-expansion({name})", k_expansion(g)))
    return out


def c4_expansion_members() -> list[tuple[str, Graph]]:
    bases = [("octahedron", fam.octahedron()), ("K4,4", complete_bipartite(4, 4)),
             ("line_graph_cube", fam.line_graph_cube())]
    for length in range(3, 7):
        for i, (g, _) in enumerate(fam.construct_all(fam.K22_BAGS, length)):
            bases.append((f"{fam.K22_BAGS}:{length}:{i}", g))
    out = []
    for name, g in bases:
        for i, x in enumerate(sorted(enumerate_c4_expansions(g), key=lambda h: h.adj)):
            out.append((f"C4-expansion({name})#{i}", x))
    return out


def _dedupe(items, max_n):
    seen = set()
    out = []
    for name, g in items:
        if g.n > max_n:
            continue
        key = canonical_form(g).graph
        if key in seen:
            continue
        seen.add(key)
        out.append((name, g))
    return out


@lru_cache(maxsize=4)
def builtin_corpus(max_n: int = MAX_CORPUS_N) -> tuple[tuple[str, Graph], ...]:
    """``(name, graph)`` pairs, first name wins among isomorphic members."""
    core = named_members() + circulant_members() + family_members()
    core = _dedupe(core, max_n)
    items = core + expansion_members(core) + c4_expansion_members() + non_transitive_members()
    return tuple(_dedupe(items, max_n))


def builtin_graphs(max_n: int = MAX_CORPUS_N) -> list[Graph]:
    return [g for _, g in builtin_corpus(max_n)]
