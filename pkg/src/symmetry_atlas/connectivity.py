"""Vertex connectivity and the separation-based connectivity predicates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .graph import Graph, components_mask, iter_bits


@dataclass(frozen=True)
class GenuineSeparation:
    """A proper separation ``(A, B)`` stored as vertex bitmasks.

    The orientation is canonical: ``a_mask <= b_mask`` as integers, so two
    orientations of the same separation compare equal.
    """

    a_mask: int
    b_mask: int

    @classmethod
    def make(cls, a_mask: int, b_mask: int) -> "GenuineSeparation":
        if a_mask > b_mask:
            a_mask, b_mask = b_mask, a_mask
        return cls(a_mask, b_mask)

    @property
    def A(self) -> frozenset:
        return frozenset(iter_bits(self.a_mask))

    @property
    def B(self) -> frozenset:
        return frozenset(iter_bits(self.b_mask))

    @property
    def separator(self) -> frozenset:
        return frozenset(iter_bits(self.a_mask & self.b_mask))

    @property
    def order(self) -> int:
        return (self.a_mask & self.b_mask).bit_count()

    def strict_sizes(self) -> tuple[int, int]:
        sep = self.a_mask & self.b_mask
        return ((self.a_mask & ~sep).bit_count(), (self.b_mask & ~sep).bit_count())

    def flipped(self) -> tuple[int, int]:
        return (self.b_mask, self.a_mask)


def _separator_splits(g: Graph, k: int):
    """Yield ``(S_mask, component masks)`` for each ``k``-separator ``S``."""
    full = g.vertex_mask()
    for sm in kernels.separators(g.adj, k):
        yield sm, components_mask(g.adj, full & ~sm)


def _bipartitions(comps):
    """Unordered splits of the component list into two nonempty groups."""
    c = len(comps)
    for code in range(1, 1 << (c - 1)):
        left = 0
        right = comps[c - 1]
        for i in range(c - 1):
            if code >> i & 1:
                left |= comps[i]
            else:
                right |= comps[i]
        yield left, right


def enumerate_separations(g: Graph, k: int) -> set[GenuineSeparation]:
    """All proper genuine separations of order exactly ``k``."""
    if k < 0:
        raise ValueError("order must be non-negative")
    out = set()
    for sm, comps in _separator_splits(g, k):
        for left, right in _bipartitions(comps):
            out.add(GenuineSeparation.make(left | sm, right | sm))
    return out


def is_k_connected(g: Graph, k: int) -> bool:
    """More than ``k`` vertices and no separator of fewer than ``k`` vertices."""
    if g.n <= k:
        return False
    if k <= 0:
        return True
    if min(g.degrees()) < k:
        return False
    for j in range(k):
        if kernels.separators(g.adj, j, 1):
            return False
    return True


def vertex_connectivity(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("vertex connectivity needs at least one vertex")
    delta = min(g.degrees())
    for j in range(min(delta, g.n - 1)):
        if kernels.separators(g.adj, j, 1):
            return j
    if delta >= g.n - 1:
        return g.n - 1
    return delta


def _every_split(g: Graph, k: int, ok) -> bool:
    for sm, comps in _separator_splits(g, k):
        for left, right in _bipartitions(comps):
            if not ok(sm, left, right):
                return False
    return True


def _is_claw(g: Graph, centre_side: int, sep: int) -> bool:
    # full side = one strict vertex joined to three pairwise non-adjacent separator vertices
    if centre_side.bit_count() != 1:
        return False
    c = centre_side.bit_length() - 1
    if g.adj[c] & sep != sep:
        return False
    return all(g.adj[v] & sep == 0 for v in iter_bits(sep))


def is_quasi_4_connected(g: Graph) -> bool:
    if not is_k_connected(g, 3):
        return False
    return _every_split(g, 3, lambda s, a, b: a.bit_count() == 1 or b.bit_count() == 1)


def is_internally_4_connected(g: Graph) -> bool:
    if not is_k_connected(g, 3):
        return False
    return _every_split(g, 3, lambda s, a, b: _is_claw(g, a, s) or _is_claw(g, b, s))


def is_quasi_5_connected(g: Graph) -> bool:
    if not is_k_connected(g, 4):
        return False
    return _every_split(g, 4, lambda s, a, b: a.bit_count() == 1 or b.bit_count() == 1)


def is_2_quasi_5_connected(g: Graph) -> bool:
    if not is_quasi_4_connected(g):
        return False
    return _every_split(g, 4, lambda s, a, b: a.bit_count() <= 2 or b.bit_count() <= 2)


def godsil_bound(d: int) -> int:
    return -(-2 * (d + 1) // 3)


def godsil_check(g: Graph) -> bool:
    """Connectivity lower bound for vertex-transitive ``d``-regular graphs."""
    if not g.is_regular():
        raise ValueError("godsil_check needs a regular graph")
    d = g.degree(0) if g.n else 0
    return vertex_connectivity(g) >= godsil_bound(d)


def brute_force_separations(g: Graph, k: int) -> set[GenuineSeparation]:
    """Reference enumeration straight from the definition (small ``n`` only)."""
    out = set()
    full = g.vertex_mask()
    verts = range(g.n)
    for S in combinations(verts, k):
        sm = 0
        for v in S:
            sm |= 1 << v
        rest = [v for v in verts if not sm >> v & 1]
        for r in range(1, len(rest)):
            for left in combinations(rest, r):
                lm = 0
                for v in left:
                    lm |= 1 << v
                rm = full & ~sm & ~lm
                if any(g.adj[v] & rm for v in left):
                    continue
                out.add(GenuineSeparation.make(lm | sm, rm | sm))
    return out
