"""Property suites: each checks one structural statement over a corpus.

A suite is a hypothesis (which graphs it applies to) and a check that
returns a list of problems. Graphs outside the hypothesis are counted as
skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import connectivity as con
from . import families as fam
from .expansions import clique_expansion, enumerate_c4_expansions, find_pattern_partitions
from .graph import Graph, cycle_power, girth, is_connected, iter_bits, line_graph
from .separations import (
    crossing_diagram,
    cut_to_line_separation,
    enumerate_edge_cuts,
    enumerate_tetra_cuts,
    enumerate_tetra_separations,
    is_nested,
    is_totally_nested,
    leq,
    line_separation_to_cut,
)
from .symmetry import (
    is_arc_transitive,
    is_edge_transitive,
    is_isomorphic,
    is_vertex_transitive,
)

# size caps for suites that build larger graphs from corpus members
EXPANSION_MAX_N = 64
ITERATED_EXPANSION_MAX_N = 120
# line graphs beyond this leave the compiled kernel's range
LINE_GRAPH_MAX_N = 64


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    skipped: int = 0
    records: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "checked": self.checked,
            "skipped": self.skipped,
            "records": self.records,
            "failures": self.failures,
        }


@dataclass(frozen=True)
class Suite:
    id: str
    statement: str
    hypothesis: object
    check: object
    uses_corpus: bool = True


def _regular_deg(g: Graph):
    return g.degree(0) if g.n and g.is_regular() else None


def _is_k4(g):
    return g.n == 4 and g.m == 6


# K4 is set aside: it is cubic and internally-4-connected but has girth 3
def _cubic_i4c(g):
    return g.is_regular(3) and not _is_k4(g) and con.is_internally_4_connected(g)


def _cubic_i4c_line(g):
    return _cubic_i4c(g) and g.m <= LINE_GRAPH_MAX_N


def _cubic_i4c_vt(g):
    return _cubic_i4c_line(g) and is_vertex_transitive(g)


def _cubic_q4c(g):
    return g.is_regular(3) and con.is_quasi_4_connected(g)


def _cubic_q4c_not_k4(g):
    return _cubic_q4c(g) and not _is_k4(g)


# -- checks -------------------------------------------------------------

def _check_godsil(g):
    d = _regular_deg(g)
    k = con.vertex_connectivity(g)
    if k < con.godsil_bound(d):
        return [f"connectivity {k} < bound {con.godsil_bound(d)} for degree {d}"]
    return []


def _check_4reg4con(g):
    return [] if con.is_k_connected(g, 4) else ["not 4-connected"]


def _check_hierarchy(g):
    out = []
    q5 = con.is_quasi_5_connected(g)
    q25 = con.is_2_quasi_5_connected(g)
    q4 = con.is_quasi_4_connected(g)
    c3 = con.is_k_connected(g, 3)
    i4 = con.is_internally_4_connected(g)
    if q5 and not q25:
        out.append("quasi-5-connected but not 2-quasi-5-connected")
    if q25 and not q4:
        out.append("2-quasi-5-connected but not quasi-4-connected")
    if q4 and not c3:
        out.append("quasi-4-connected but not 3-connected")
    if i4 and not q4:
        out.append("internally-4-connected but not quasi-4-connected")
    at, et, vt = is_arc_transitive(g), is_edge_transitive(g), is_vertex_transitive(g)
    if at and not et:
        out.append("arc-transitive but not edge-transitive")
    if at and g.m and min(g.degrees()) > 0 and not vt:
        out.append("arc-transitive without isolated vertices but not vertex-transitive")
    return out


def _triangles(L: Graph):
    out = []
    for u, v in L.edges():
        for w in iter_bits(L.adj[u] & L.adj[v]):
            if w > v:
                out.append((u, v, w))
    return out


def _check_line_graph(g):
    L, index = line_graph(g)
    out = []
    if not L.is_regular(4):
        out.append("line graph is not 4-regular")
    if not con.is_k_connected(L, 4):
        out.append("line graph is not 4-connected")
    tris = _triangles(L)
    at = [[] for _ in range(L.n)]
    for t in tris:
        for x in t:
            at[x].append(set(t))
    for x in range(L.n):
        if len(at[x]) != 2:
            out.append(f"vertex {x} lies in {len(at[x])} triangles")
        elif at[x][0] & at[x][1] != {x}:
            out.append(f"the two triangles at {x} meet in more than {x}")
    for u, v in L.edges():
        k = len(iter_bits(L.adj[u] & L.adj[v]))
        if k != 1:
            out.append(f"edge {(u, v)} lies in {k} triangles")
    stars = set()
    for v in range(g.n):
        stars.add(frozenset(i for i, e in enumerate(index) if v in e))
    for t in tris:
        if frozenset(t) not in stars:
            out.append(f"triangle {t} is not the edge set at a vertex")
    return out


def _check_arc3reg(g):
    if is_isomorphic(g, fam.cube()) is not None or con.is_2_quasi_5_connected(g):
        return []
    return ["neither the cube nor 2-quasi-5-connected"]


def _check_cubic_q4c_shape(g):
    if con.is_internally_4_connected(g) and girth(g) >= 4:
        return []
    if is_isomorphic(g, fam.k3_box_k2()) is not None:
        return []
    return ["not internally-4-connected with girth >= 4, and not K3xK2"]


def _line_images(g):
    L, index = line_graph(g)
    cuts = sorted(enumerate_tetra_cuts(g), key=lambda c: (c.a_mask, c.b_mask))
    images = [cut_to_line_separation(g, c, L, index) for c in cuts]
    return L, index, cuts, images


def _check_bijection(g):
    L, index, cuts, images = _line_images(g)
    out = []
    seps = enumerate_tetra_separations(L)
    if len(set(images)) != len(cuts):
        out.append("map is not injective")
    if set(images) != seps:
        out.append(f"{len(cuts)} tetra-cuts but {len(seps)} tetra-separations of L(G), images differ")
    for c, s in zip(cuts, images):
        back = line_separation_to_cut(g, s, index)
        if back != c:
            out.append(f"inverse fails on {c!r}")
    for s in seps:
        back = line_separation_to_cut(g, s, index)
        if cut_to_line_separation(g, back, L, index) != s:
            out.append(f"round trip fails on {s!r}")
    return out


def _check_order(g):
    L, index, cuts, images = _line_images(g)
    out = []
    for (c1, s1), (c2, s2) in combinations(list(zip(cuts, images)), 2):
        for a, b, x, y in ((c1, c2, s1, s2), (c1, c2.flip(), s1, s2.flip()),
                           (c2, c1, s2, s1), (c2.flip(), c1, s2.flip(), s1)):
            if leq(a, b) != leq(x, y):
                out.append(f"order differs for {a!r} vs {b!r}")
    return out


def _check_genuine(g):
    L, _ = line_graph(g)
    bad = [s for s in enumerate_tetra_separations(L) if not s.is_genuine]
    return [f"tetra-separation {s!r} has separator edges" for s in bad]


def _induces_c4(g, side):
    vs = iter_bits(side)
    return len(vs) == 4 and all((g.adj[v] & side).bit_count() == 2 for v in vs)


def _check_totally_nested_c4(g):
    out = []
    for c in enumerate_tetra_cuts(g):
        if is_totally_nested(g, c) and not (_induces_c4(g, c.a_mask) or _induces_c4(g, c.b_mask)):
            out.append(f"totally-nested tetra-cut {c!r} has no C4 side")
    return out


def _check_no_3_edge_cut(g):
    out = []
    for k in (1, 2, 3):
        for c in enumerate_edge_cuts(g, k):
            if k < 3 or min(c.a_mask.bit_count(), c.b_mask.bit_count()) != 1:
                out.append(f"{k}-edge-cut {c!r} is not an atomic 3-edge-cut")
    return out


def _check_crossing(g):
    out = []
    cuts = sorted(enumerate_tetra_cuts(g), key=lambda c: (c.a_mask, c.b_mask))
    for c1, c2 in combinations(cuts, 2):
        if is_nested(c1, c2):
            continue
        d = crossing_diagram(c1, c2)
        sizes = d.link_sizes()
        if any(v != 2 for v in sizes.values()) or d.centre_size:
            out.append(f"crossing pair has links {sizes} and centre {d.centre_size}")
    return out


def _check_totally_nested_k4(g):
    out = []
    for s in enumerate_tetra_separations(g):
        if not is_totally_nested(g, s):
            continue
        if s.sep_mask:
            out.append(f"totally-nested {s!r} has separator vertices")
        sa, sb = s.a_mask, s.b_mask
        k4 = any(len(iter_bits(x)) == 4 and all((g.adj[v] & x).bit_count() == 3 for v in iter_bits(x))
                 for x in (sa, sb))
        if not k4:
            out.append(f"totally-nested {s!r} has no K4 side")
    return out


def _check_no_tetracut(g):
    return [] if con.is_2_quasi_5_connected(g) else ["no tetra-cut but not 2-quasi-5-connected"]


def _check_expansion_transitivity(g):
    vt = is_vertex_transitive(clique_expansion(g))
    at = is_arc_transitive(g)
    if vt != at:
        return [f"clique-expansion vertex-transitive={vt} but base arc-transitive={at}"]
    return []


def _check_iterated(g):
    x = clique_expansion(clique_expansion(g))
    return ["iterated clique-expansion is vertex-transitive"] if is_vertex_transitive(x) else []


def _check_not_arc(g):
    return ["arc-transitive"] if is_arc_transitive(g) else []


def _check_not_edge(g):
    return ["edge-transitive"] if is_edge_transitive(g) else []


# -- hypotheses ---------------------------------------------------------

def _hyp_godsil(g):
    # K1 and K2 miss the bound by the n > k convention
    return g.n >= 3 and is_connected(g) and g.is_regular() and is_vertex_transitive(g)


def _hyp_4reg4con(g):
    d = _regular_deg(g)
    return d is not None and d >= 4 and is_connected(g) and is_vertex_transitive(g)


def _hyp_arc3reg(g):
    return _cubic_q4c(g) and is_arc_transitive(g)


def _hyp_crossing(g):
    return con.is_internally_4_connected(g)


def _hyp_k4(g):
    return con.is_k_connected(g, 4) and is_vertex_transitive(g)


def _hyp_no_tetracut(g):
    return _cubic_q4c(g) and not enumerate_tetra_cuts(g)


def _hyp_expansion(g):
    d = _regular_deg(g)
    return d is not None and d >= 3 and is_connected(g) and g.n * d <= EXPANSION_MAX_N


def _hyp_iterated(g):
    d = _regular_deg(g)
    return d is not None and d >= 3 and is_connected(g) and g.n * d * d <= ITERATED_EXPANSION_MAX_N


def _hyp_triangle_bags(g):
    return g.n >= 6 and g.is_regular(4) and is_isomorphic(g, cycle_power(g.n, 2)) is not None


def _hyp_c4_expansion(g):
    return g.is_regular(3) and g.n % 4 == 0 and bool(find_pattern_partitions(g, "C4"))


def _lq3_count(_corpus):
    found = enumerate_c4_expansions(fam.line_graph_cube())
    rec = {"name": "line_graph_cube", "count": len(found)}
    fails = [] if len(found) == 3 else [f"expected 3 classes, found {len(found)}"]
    return rec, fails


SUITES = {s.id: s for s in (
    Suite("godsil", "vertex-transitive d-regular graphs have connectivity >= ceil(2(d+1)/3)",
          _hyp_godsil, _check_godsil),
    Suite("4reg4con", "vertex-transitive d-regular graphs with d >= 4 are 4-connected",
          _hyp_4reg4con, _check_4reg4con),
    Suite("hierarchy", "connectivity tiers and transitivity flags are nested",
          is_connected, _check_hierarchy),
    Suite("line-graph-properties", "line graphs of cubic internally-4-connected graphs",
          _cubic_i4c, _check_line_graph),
    Suite("arc3reg", "cubic quasi-4-connected arc-transitive graphs are the cube or 2-quasi-5-connected",
          _hyp_arc3reg, _check_arc3reg),
    Suite("cubic-q4c-shape", "cubic quasi-4-connected graphs are internally-4-connected with girth >= 4, or K3xK2",
          _cubic_q4c_not_k4, _check_cubic_q4c_shape),
    Suite("bijection", "tetra-cuts of G correspond to tetra-separations of L(G)",
          _cubic_i4c_vt, _check_bijection),
    Suite("order-preservation", "the tetra-cut correspondence preserves the order both ways",
          _cubic_i4c_vt, _check_order),
    Suite("genuine-seps", "tetra-separations of L(G) have no separator edges",
          _cubic_i4c_vt, _check_genuine),
    Suite("totally-nested-c4", "totally-nested tetra-cuts have a side inducing C4",
          _cubic_i4c_vt, _check_totally_nested_c4),
    Suite("no-3-edge-cut", "every (<=3)-edge-cut of an internally-4-connected graph is atomic of order 3",
          _hyp_crossing, _check_no_3_edge_cut),
    Suite("crossing-tetracuts", "crossing tetra-cuts have all links of size 2 and empty centre",
          _hyp_crossing, _check_crossing),
    Suite("totally-nested-k4", "totally-nested tetra-separations are all-edge with a K4 side",
          _hyp_k4, _check_totally_nested_k4),
    Suite("no-tetracut-2q5c", "cubic quasi-4-connected graphs without tetra-cuts are 2-quasi-5-connected",
          _hyp_no_tetracut, _check_no_tetracut),
    Suite("expansion-transitivity", "the clique-expansion is vertex-transitive iff the base is arc-transitive",
          _hyp_expansion, _check_expansion_transitivity),
    Suite("iterated-expansion", "iterated clique-expansions are not vertex-transitive",
          _hyp_iterated, _check_iterated),
    Suite("triangle-bags-not-arc-transitive", "C_l^2 with l >= 6 is not arc-transitive",
          _hyp_triangle_bags, _check_not_arc),
    Suite("c4-expansion-not-edge-transitive", "C4-expansions of 4-regular graphs are not edge-transitive",
          _hyp_c4_expansion, _check_not_edge),
    Suite("c4-expansion-count-lq3", "L(Q3) has exactly three vertex-transitive C4-expansions",
          None, _lq3_count, uses_corpus=False),
)}

SUITE_IDS = tuple(SUITES)


def _named(corpus):
    for i, item in enumerate(corpus):
        if isinstance(item, tuple):
            yield item
        else:
            yield f"#{i}", item


def run_suite(suite: str, corpus=None) -> SuiteReport:
    """Run one suite; ``corpus`` defaults to the built-in corpus."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    spec = SUITES[suite]
    report = SuiteReport(suite)
    if not spec.uses_corpus:
        rec, fails = spec.check(corpus)
        report.checked = 1
        report.records.append({**rec, "failures": fails})
        report.failures.extend({"name": rec["name"], "failure": f} for f in fails)
        return report
    if corpus is None:
        from .corpus import builtin_corpus
        corpus = builtin_corpus()
    for name, g in _named(corpus):
        if not spec.hypothesis(g):
            report.skipped += 1
            continue
        report.checked += 1
        fails = spec.check(g)
        report.records.append({"name": name, "n": g.n, "failures": fails})
        report.failures.extend({"name": name, "failure": f} for f in fails)
    return report


def run_all(corpus=None) -> dict[str, SuiteReport]:
    return {sid: run_suite(sid, corpus) for sid in SUITE_IDS}
