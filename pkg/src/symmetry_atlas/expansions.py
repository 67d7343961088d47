"""Clique-, H- and C4-expansions, and recovering expansion partitions.

The ``H``-expansion of an ``r``-regular graph ``G`` replaces every vertex
``v`` by a copy ``H_v`` of an ``r``-vertex graph ``H``; each edge ``uv``
of ``G`` becomes a single edge between ``H_u`` and ``H_v``, and these
edges form a perfect matching. ``ports[v][u]`` names the vertex of
``H_v`` that receives the edge ``uv``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from .graph import Graph, contract_partition, from_edge_list, iter_bits
from .symmetry import automorphism_group, canonical_form, is_vertex_transitive

C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
MAX_C4_EXPANSION_BASE = 13


def clique_expansion(g: Graph) -> Graph:
    """Vertices are the arcs ``(u, v)``; reversal pairs and same-tail pairs are adjacent."""
    arcs = sorted(a for u, v in g.edges() for a in ((u, v), (v, u)))
    index = {a: i for i, a in enumerate(arcs)}
    edges = []
    for (u, v), i in index.items():
        j = index[(v, u)]
        if i < j:
            edges.append((i, j))
    by_tail: dict[int, list[int]] = {}
    for (u, _), i in index.items():
        by_tail.setdefault(u, []).append(i)
    for members in by_tail.values():
        edges.extend(combinations(members, 2))
    return from_edge_list(len(arcs), edges)


def _check_ports(g: Graph, r: int, ports) -> list[dict]:
    out = []
    for v in range(g.n):
        nb = g.neighbors(v)
        pv = ports[v]
        if isinstance(pv, Mapping):
            mp = dict(pv)
        else:
            pv = list(pv)
            if len(pv) != len(nb):
                raise ValueError(f"ports of vertex {v} do not match its degree")
            mp = dict(zip(nb, pv))
        if sorted(mp) != nb:
            raise ValueError(f"ports of vertex {v} must cover exactly its neighbours")
        if sorted(mp.values()) != list(range(r)):
            raise ValueError(f"ports of vertex {v} must be a bijection onto 0..{r - 1}")
        out.append(mp)
    return out


def h_expansion(g: Graph, h: Graph, ports) -> Graph:
    """``H``-expansion with vertex ``(v, x)`` numbered ``v * |H| + x``.

    ``ports[v]`` is either a mapping neighbour -> H-vertex or a sequence
    aligned with ``g.neighbors(v)``.
    """
    r = h.n
    if not g.is_regular(r):
        raise ValueError(f"base graph must be {r}-regular")
    mp = _check_ports(g, r, ports)
    edges = []
    for v in range(g.n):
        for x, y in h.edges():
            edges.append((v * r + x, v * r + y))
    for u, v in g.edges():
        edges.append((u * r + mp[u][v], v * r + mp[v][u]))
    return from_edge_list(g.n * r, edges)


def natural_ports(g: Graph) -> list[list[int]]:
    """Ports assigning the ``i``-th smallest neighbour to H-vertex ``i``."""
    return [list(range(g.degree(v))) for v in range(g.n)]


def k_expansion(g: Graph, r: int | None = None) -> Graph:
    """The ``K_r``-expansion of an ``r``-regular graph (unique up to isomorphism)."""
    from .graph import complete
    r = g.degree(0) if r is None else r
    return h_expansion(g, complete(r), natural_ports(g))


# pairing k puts the first neighbour opposite neighbour k+1 on the C4
_C4_PORTS = (
    (0, 2, 1, 3),
    (0, 1, 2, 3),
    (0, 1, 3, 2),
)


def c4_ports(g: Graph, code: Sequence[int]) -> list[list[int]]:
    """Ports for the C4-expansion given one pairing index (0..2) per vertex."""
    return [list(_C4_PORTS[c]) for c in code]


def c4_expansion(g: Graph, code: Sequence[int]) -> Graph:
    return h_expansion(g, C4, c4_ports(g, code))


def _pairing_index(nb, a, b):
    """Index of the pairing of ``nb`` that pairs ``a`` with ``b``."""
    first = nb[0]
    if first == a:
        partner = b
    elif first == b:
        partner = a
    else:
        partner = next(x for x in nb if x not in (a, b, first))
    return nb.index(partner) - 1


def _pairing_action(g: Graph, perm) -> np.ndarray:
    """``T[v, k]``: pairing index at ``perm[v]`` of the image of pairing ``k`` at ``v``."""
    T = np.zeros((g.n, 3), dtype=np.int64)
    nbs = [g.neighbors(v) for v in range(g.n)]
    for v in range(g.n):
        nb = nbs[v]
        w = perm[v]
        for k in range(3):
            a, b = perm[nb[0]], perm[nb[k + 1]]
            T[v, k] = _pairing_index(nbs[w], a, b)
    return T


def _code_orbit_reps(g: Graph) -> np.ndarray:
    n = g.n
    total = 3 ** n
    codes = np.arange(total, dtype=np.int64)
    digits = np.empty((total, n), dtype=np.int64)
    x = codes.copy()
    for v in range(n):
        digits[:, v] = x % 3
        x //= 3
    powers = 3 ** np.arange(n, dtype=np.int64)
    images = []
    for perm in automorphism_group(g).generators:
        T = _pairing_action(g, perm)
        img = np.zeros(total, dtype=np.int64)
        for v in range(n):
            img += T[v][digits[:, v]] * powers[perm[v]]
        images.append(img)
    lab = codes.copy()
    while True:
        before = lab.copy()
        for img in images:
            m = np.minimum(lab, lab[img])
            lab = m
            lab[img] = np.minimum(lab[img], lab)
        lab = lab[lab]
        if np.array_equal(lab, before):
            break
    return np.unique(lab)


def _walk_prefilter(g: Graph, codes: np.ndarray, steps: int = 8, chunk: int = 1024) -> np.ndarray:
    """Boolean mask: closed-walk counts of length ``3..steps`` agree at every vertex.

    Vertex-transitive graphs always pass. Works on the whole batch of
    pairing codes at once.
    """
    n = g.n
    N = 4 * n
    nbs = [g.neighbors(v) for v in range(n)]
    pos = [{u: i for i, u in enumerate(nb)} for nb in nbs]
    table = np.array(_C4_PORTS, dtype=np.int64)
    powers = 3 ** np.arange(n, dtype=np.int64)
    keep = np.zeros(len(codes), dtype=bool)
    for start in range(0, len(codes), chunk):
        block = codes[start:start + chunk]
        R = len(block)
        digits = (block[:, None] // powers[None, :]) % 3
        A = np.zeros((R, N, N), dtype=np.float32)
        for v in range(n):
            for x, y in C4.edges():
                A[:, 4 * v + x, 4 * v + y] = 1
                A[:, 4 * v + y, 4 * v + x] = 1
        rows = np.arange(R)
        for u, v in g.edges():
            pu = 4 * u + table[digits[:, u], pos[u][v]]
            pv = 4 * v + table[digits[:, v], pos[v][u]]
            A[rows, pu, pv] = 1
            A[rows, pv, pu] = 1
        ok = np.ones(R, dtype=bool)
        P = A
        for k in range(2, steps + 1):
            P = P @ A
            if k < 3:
                continue
            d = np.diagonal(P, axis1=1, axis2=2)
            ok &= np.all(d == d[:, :1], axis=1)
        keep[start:start + R] = ok
    return keep


def _decode(code: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        out.append(code % 3)
        code //= 3
    return out


def enumerate_c4_expansions(g: Graph, filter_vertex_transitive: bool = True) -> set[Graph]:
    """C4-expansions of a 4-regular graph up to isomorphism (canonical graphs).

    Pairing codes are reduced to ``Aut(g)``-orbit representatives first;
    the vertex-transitivity filter uses a closed-walk prefilter before the
    exact orbit check.
    """
    if not g.is_regular(4) or g.n == 0:
        raise ValueError("C4-expansions need a 4-regular base graph")
    if g.n > MAX_C4_EXPANSION_BASE:
        raise ValueError(f"C4-expansion enumeration is capped at n <= {MAX_C4_EXPANSION_BASE}")
    reps = _code_orbit_reps(g)
    if filter_vertex_transitive:
        reps = reps[_walk_prefilter(g, reps)]
    out = set()
    for code in reps:
        x = c4_expansion(g, _decode(int(code), g.n))
        if filter_vertex_transitive and not is_vertex_transitive(x):
            continue
        out.add(canonical_form(x).graph)
    return out


def _induces(g: Graph, block: int, pattern: str) -> bool:
    vs = iter_bits(block)
    degs = [(g.adj[v] & block).bit_count() for v in vs]
    if pattern == "K3":
        return len(vs) == 3 and all(d == 2 for d in degs)
    if pattern == "K4":
        return len(vs) == 4 and all(d == 3 for d in degs)
    if pattern == "C4":
        if len(vs) != 4 or any(d != 2 for d in degs):
            return False
        return True
    raise ValueError(f"unknown pattern {pattern!r}")


PATTERN_SIZES = {"K3": 3, "K4": 4, "C4": 4}


def _candidate_blocks(g: Graph, pattern: str) -> list[int]:
    k = PATTERN_SIZES[pattern]
    found = set()
    for v in range(g.n):
        ball = g.adj[v]
        for u in iter_bits(g.adj[v]):
            ball |= g.adj[u]
        ball &= ~((1 << (v + 1)) - 1)
        for rest in combinations(iter_bits(ball), k - 1):
            block = 1 << v
            for u in rest:
                block |= 1 << u
            if not _induces(g, block, pattern):
                continue
            if all((g.adj[u] & ~block).bit_count() == 1 for u in iter_bits(block)):
                found.add(block)
    return sorted(found)


def find_pattern_partitions(g: Graph, pattern: str) -> set[frozenset]:
    """Partitions into pattern-inducing blocks joined by a perfect matching.

    Each result is a frozenset of frozensets. Distinct blocks are joined
    by at most one edge.
    """
    if pattern not in PATTERN_SIZES:
        raise ValueError(f"unknown pattern {pattern!r}")
    if g.n == 0 or g.n % PATTERN_SIZES[pattern]:
        return set()
    blocks = _candidate_blocks(g, pattern)
    by_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for b in blocks:
        by_vertex[(b & -b).bit_length() - 1].append(b)
    full = g.vertex_mask()
    out = set()

    def ok(chosen):
        where = {}
        for i, b in enumerate(chosen):
            for v in iter_bits(b):
                where[v] = i
        seen = set()
        for u, v in g.edges():
            a, c = where[u], where[v]
            if a != c:
                key = (min(a, c), max(a, c))
                if key in seen:
                    return False
                seen.add(key)
        return True

    def rec(covered, chosen):
        if covered == full:
            if ok(chosen):
                out.add(frozenset(frozenset(iter_bits(b)) for b in chosen))
            return
        low = ~covered & full
        v = (low & -low).bit_length() - 1
        for b in by_vertex[v]:
            if b & covered:
                continue
            chosen.append(b)
            rec(covered | b, chosen)
            chosen.pop()

    rec(0, [])
    return out


def contract(g: Graph, partition) -> Graph:
    return contract_partition(g, [sorted(b) for b in partition])
