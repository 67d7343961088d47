"""Branch matching for the vertex-transitive characterisations.

``classify`` reports every branch a connected graph satisfies, each with
a witness that :func:`revalidate` can re-check. Branch ids:

``thm1/*``
    quasi-4-connected cases, K3-expansions and trivial graphs.
``mainthm/1`` .. ``mainthm/10``
    the ten items for quasi-4-connected graphs.
``maincor/*``
    the corollary covering every connected graph.
``prop4con/1`` .. ``prop4con/7``
    the 4-connected case.
``prop3reg/1`` .. ``prop3reg/6``
    the 3-regular quasi-4-connected case.
``prop3con/*``
    the 3-connectivity refinement (K3-expansion bases read as 3-regular).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import connectivity as con
from . import families as fam
from .expansions import find_pattern_partitions
from .graph import Graph, contract_partition, is_connected
from .graph6 import MAX_VERTICES
from .symmetry import (
    automorphism_group,
    canonical_form,
    is_arc_transitive,
    is_edge_transitive,
    is_isomorphic,
    is_vertex_transitive,
)

# smallest length the theorems name for each family
THEOREM_MIN_LENGTH = {
    fam.K4_BAGS: 4,
    fam.ALT_K4_C4: 4,
    fam.TRIANGLE_BAGS: 6,
    fam.ALT_K22_C4: 6,
    fam.C4_BAGS: 4,
    fam.K22_BAGS: 3,
}

MAX_DEPTH = 2


@dataclass(frozen=True)
class Branch:
    theorem: str
    branch: str
    witness: dict = field(compare=False, hash=False)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "branch": self.branch, "witness": self.witness}


@dataclass
class Classification:
    n: int
    m: int
    flags: dict
    tiers: list
    branches: list
    notes: list = field(default_factory=list)

    @property
    def vertex_transitive(self) -> bool:
        return self.flags["vertex_transitive"]

    def branch_ids(self) -> list[str]:
        return [b.branch for b in self.branches]

    def has(self, prefix: str) -> bool:
        return any(b.branch == prefix or b.branch.startswith(prefix + "/") for b in self.branches)

    def headline(self) -> str | None:
        ids = sorted(self.branch_ids())
        return ids[0] if ids else None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "flags": dict(self.flags),
            "tiers": list(self.tiers),
            "branches": [b.to_json() for b in self.branches],
            "notes": list(self.notes),
        }


def _word(g: Graph) -> str | None:
    return canonical_form(g).word if g.n <= MAX_VERTICES else None


@lru_cache(maxsize=4096)
def _tiers(g: Graph) -> tuple[str, ...]:
    out = []
    if con.is_k_connected(g, 3):
        out.append("3-connected")
    if con.is_k_connected(g, 4):
        out.append("4-connected")
    if con.is_quasi_4_connected(g):
        out.append("quasi-4-connected")
        if con.is_internally_4_connected(g):
            out.append("internally-4-connected")
        if con.is_2_quasi_5_connected(g):
            out.append("2-quasi-5-connected")
        if "4-connected" in out and con.is_quasi_5_connected(g):
            out.append("quasi-5-connected")
    return tuple(out)


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_regular(2) and is_connected(g)


def _trivial_shape(g: Graph) -> str | None:
    if g.n == 1:
        return "K1"
    if g.n == 2 and g.m == 1:
        return "K2"
    if _is_cycle(g):
        return "cycle"
    return None


@lru_cache(maxsize=4096)
def _families(g: Graph, max_length: int) -> frozenset:
    return frozenset(fam.recognize(g, max_length))


def _family_witness(match: fam.FamilyMatch) -> dict:
    return {"kind": "family", **match.to_json()}


def _in_range(match) -> bool:
    if match.family == fam.LINE_GRAPH_CUBE:
        return True
    return match.length >= THEOREM_MIN_LENGTH[match.family]


@dataclass(frozen=True)
class _Base:
    pattern: str
    partition: tuple
    graph: Graph


def _expansions(g: Graph, pattern: str) -> list[_Base]:
    need = {"K3": 3, "K4": 4, "C4": 3}[pattern]
    if not g.is_regular(need):
        return []
    out = []
    for part in sorted(find_pattern_partitions(g, pattern), key=lambda p: sorted(sorted(b) for b in p)):
        blocks = tuple(sorted(tuple(sorted(b)) for b in part))
        out.append(_Base(pattern, blocks, contract_partition(g, blocks)))
    return out


def _base_summary(base: _Base, max_length: int, depth: int) -> dict:
    h = base.graph
    summary = {
        "n": h.n,
        "degree": h.degree(0) if h.n else 0,
        "graph6": _word(h),
        "tiers": list(_tiers(h)),
        "arc_transitive": is_arc_transitive(h),
    }
    if depth < MAX_DEPTH:
        summary["families"] = sorted(f"{m.family}:{m.length}" for m in _families(h, max_length))
    return summary


def _exp_witness(base: _Base, summary: dict) -> dict:
    return {
        "kind": "expansion",
        "pattern": base.pattern,
        "partition": [list(b) for b in base.partition],
        "base": summary,
    }


def _is_line_graph_cube(h: Graph) -> bool:
    return h.n == 12 and h.m == 24 and is_isomorphic(h, fam.line_graph_cube()) is not None


def _is_cube(h: Graph) -> bool:
    return h.n == 8 and h.m == 12 and is_isomorphic(h, fam.cube()) is not None


def _is_k3_box_k2(h: Graph) -> bool:
    return h.n == 6 and h.m == 9 and is_isomorphic(h, fam.k3_box_k2()) is not None


def classify(g: Graph, max_length: int = fam.DEFAULT_MAX_LENGTH, depth: int = 0) -> Classification:
    """All matching branches for a connected graph ``g``."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("classify needs a nonempty connected graph")
    vt = is_vertex_transitive(g)
    flags = {
        "vertex_transitive": vt,
        "edge_transitive": is_edge_transitive(g),
        "arc_transitive": is_arc_transitive(g),
        "regular": g.is_regular(),
        "aut_order": automorphism_group(g).order,
    }
    tiers = list(_tiers(g))
    q4c = "quasi-4-connected" in tiers
    notes: list[str] = []
    branches: list[Branch] = []

    def add(theorem, branch, witness):
        branches.append(Branch(theorem, f"{theorem}/{branch}", witness))

    # trivial graphs
    shape = _trivial_shape(g)
    if shape is not None:
        w = {"kind": "trivial", "shape": shape}
        add("thm1", "trivial", w)
        add("maincor", "trivial", w)
        add("prop3con", "trivial", w)

    families = _families(g, max_length)
    in_range = {m for m in families if _in_range(m)}
    for m in sorted(families - in_range, key=lambda x: (x.family, x.length)):
        notes.append(f"{m.family} of length {m.length} is below the theorem range")

    def fam_match(tag):
        return sorted((m for m in in_range if m.family == tag), key=lambda x: x.scheme)

    deg = g.degree(0) if g.is_regular() else None

    # expansion bases, evaluated once
    k3 = _expansions(g, "K3") if depth < MAX_DEPTH else []
    k4 = _expansions(g, "K4") if depth < MAX_DEPTH else []
    c4 = _expansions(g, "C4") if depth < MAX_DEPTH and vt else []

    def base_info(base):
        return _base_summary(base, max_length, depth + 1)

    def base_q5_4reg_arc(base):
        h = base.graph
        return h.is_regular(4) and is_arc_transitive(h) and con.is_quasi_5_connected(h)

    def base_families(base, tag, min_len):
        return [m for m in _families(base.graph, max_length) if m.family == tag and m.length >= min_len]

    # the ten items for quasi-4-connected graphs
    main_items: dict[int, list[dict]] = {}
    if q4c:
        if vt and deg is not None and deg >= 4 and "quasi-5-connected" in tiers:
            main_items.setdefault(1, []).append({"kind": "predicates", "passed": ["regular>=4", "quasi-5-connected", "vertex-transitive"]})
        if vt and deg == 3 and "2-quasi-5-connected" in tiers:
            main_items.setdefault(2, []).append({"kind": "predicates", "passed": ["3-regular", "2-quasi-5-connected", "vertex-transitive"]})
        for base in k4:
            if base_q5_4reg_arc(base):
                main_items.setdefault(3, []).append(_exp_witness(base, base_info(base)))
        for base in c4:
            if base_q5_4reg_arc(base):
                main_items.setdefault(3, []).append(_exp_witness(base, base_info(base)))
        for item, tag in ((4, fam.K4_BAGS), (5, fam.ALT_K4_C4), (6, fam.TRIANGLE_BAGS),
                          (7, fam.ALT_K22_C4), (8, fam.C4_BAGS), (9, fam.K22_BAGS)):
            for m in fam_match(tag):
                main_items.setdefault(item, []).append(_family_witness(m))
        if _is_k3_box_k2(g):
            main_items.setdefault(8, []).append({"kind": "named", "name": "K3xK2"})
        for base in k4 + c4:
            if base_families(base, fam.K22_BAGS, 3):
                main_items.setdefault(9, []).append(_exp_witness(base, base_info(base)))
        if _is_line_graph_cube(g):
            main_items.setdefault(10, []).append({"kind": "named", "name": "line_graph_cube"})
        for base in k4 + c4:
            if _is_line_graph_cube(base.graph):
                main_items.setdefault(10, []).append(_exp_witness(base, base_info(base)))
    for item in sorted(main_items):
        for w in main_items[item]:
            add("mainthm", str(item), w)

    # Main Corollary
    if main_items:
        add("maincor", "mainthm", {"kind": "items", "items": sorted(main_items)})
    k3_bases = []
    for base in k3:
        h = base.graph
        if h.is_regular(3) and is_arc_transitive(h):
            k3_bases.append(base)
    for base in k3_bases:
        h = base.graph
        if con.is_2_quasi_5_connected(h):
            add("maincor", "k3-expansion-2q5c-arc", _exp_witness(base, base_info(base)))
        if _is_cube(h):
            add("maincor", "k3-expansion-cube", _exp_witness(base, base_info(base)))

    # quasi-4-connected and K3-expansion cases
    if q4c and vt:
        add("thm1", "q4c-vt", {"kind": "predicates", "passed": ["quasi-4-connected", "vertex-transitive"]})
    for base in k3_bases:
        if con.is_quasi_4_connected(base.graph):
            w = _exp_witness(base, base_info(base))
            add("thm1", "k3-expansion", w)
            add("prop3con", "k3-expansion", w)
            notes.append("K3-expansion base read as 3-regular")

    # appendix refinement
    if vt and "internally-4-connected" in tiers:
        add("prop3con", "i4c-vt", {"kind": "predicates", "passed": ["internally-4-connected", "vertex-transitive"]})
    if _is_k3_box_k2(g):
        add("prop3con", "trivial", {"kind": "named", "name": "K3xK2"})

    # 4-connected case
    if "4-connected" in tiers:
        if vt and "quasi-5-connected" in tiers:
            add("prop4con", "1", {"kind": "predicates", "passed": ["quasi-5-connected", "vertex-transitive"]})
        for base in k4:
            h = base.graph
            if is_arc_transitive(h) and con.is_quasi_5_connected(h):
                add("prop4con", "2", _exp_witness(base, base_info(base)))
        for item, tag in ((3, fam.K4_BAGS), (4, fam.ALT_K4_C4), (5, fam.TRIANGLE_BAGS), (6, fam.K22_BAGS)):
            for m in fam_match(tag):
                add("prop4con", str(item), _family_witness(m))
        for base in k4:
            if base_families(base, fam.K22_BAGS, 3):
                add("prop4con", "6", _exp_witness(base, base_info(base)))
        if _is_line_graph_cube(g):
            add("prop4con", "7", {"kind": "named", "name": "line_graph_cube"})
        for base in k4:
            if _is_line_graph_cube(base.graph):
                add("prop4con", "7", _exp_witness(base, base_info(base)))

    # 3-regular quasi-4-connected case
    if q4c and deg == 3:
        if vt and "2-quasi-5-connected" in tiers:
            add("prop3reg", "1", {"kind": "predicates", "passed": ["2-quasi-5-connected", "vertex-transitive"]})
        for base in c4:
            if base_q5_4reg_arc(base):
                add("prop3reg", "2", _exp_witness(base, base_info(base)))
        for m in fam_match(fam.C4_BAGS):
            add("prop3reg", "3", _family_witness(m))
        if _is_k3_box_k2(g):
            add("prop3reg", "3", {"kind": "named", "name": "K3xK2"})
        for m in fam_match(fam.ALT_K22_C4):
            add("prop3reg", "4", _family_witness(m))
        for base in c4:
            if _is_line_graph_cube(base.graph):
                add("prop3reg", "5", _exp_witness(base, base_info(base)))
            if base_families(base, fam.K22_BAGS, 3):
                add("prop3reg", "6", _exp_witness(base, base_info(base)))

    if g.n >= 4 and g.m == g.n * (g.n - 1) // 2:
        notes.append("small exceptional: complete graph")
    seen = set()
    uniq = []
    for n_ in notes:
        if n_ not in seen:
            seen.add(n_)
            uniq.append(n_)
    return Classification(g.n, g.m, flags, tiers, branches, uniq)


def revalidate(g: Graph, c: Classification) -> list[str]:
    """Re-check every structural witness; returns a list of problems."""
    problems = []
    for b in c.branches:
        w = b.witness
        kind = w.get("kind")
        if kind == "family":
            d = fam.CycleDecomposition(tuple(frozenset(x) for x in w["witness"]["bags"]))
            ok, why = fam.check_family_axioms(g, d, w["family"])
            if not ok:
                problems.append(f"{b.branch}: {why}")
        elif kind == "expansion":
            blocks = [list(x) for x in w["partition"]]
            part = frozenset(frozenset(x) for x in blocks)
            if part not in find_pattern_partitions(g, w["pattern"]):
                problems.append(f"{b.branch}: partition does not re-induce {w['pattern']}")
            h = contract_partition(g, blocks)
            if h.n != w["base"]["n"] or (w["base"]["graph6"] is not None
                                         and canonical_form(h).word != w["base"]["graph6"]):
                problems.append(f"{b.branch}: contracted base differs")
        elif kind == "trivial":
            if _trivial_shape(g) != w["shape"]:
                problems.append(f"{b.branch}: not a {w['shape']}")
        elif kind == "named":
            check = {"K3xK2": _is_k3_box_k2, "line_graph_cube": _is_line_graph_cube}[w["name"]]
            if not check(g):
                problems.append(f"{b.branch}: not {w['name']}")
    return problems


@dataclass
class Report:
    records: list
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"schema": 1, "records": self.records, "failures": self.failures}


def characterization_failures(g: Graph, c: Classification) -> list[str]:
    out = []
    vt = c.vertex_transitive
    if vt and not c.has("maincor"):
        out.append("vertex-transitive but no corollary branch matched")
    if c.branches and not vt:
        out.append(f"branches {c.branch_ids()} matched a graph that is not vertex-transitive")
    out.extend(revalidate(g, c))
    return out


def verify_characterization(corpus, max_length: int = fam.DEFAULT_MAX_LENGTH) -> Report:
    """Check both directions of the corollary on every connected corpus graph."""
    records = []
    failures = []
    for name, g in _named_items(corpus):
        if not is_connected(g):
            continue
        c = classify(g, max_length)
        fails = characterization_failures(g, c)
        records.append({"name": name, "vertex_transitive": c.vertex_transitive,
                        "branches": c.branch_ids(), "failures": fails})
        failures.extend({"name": name, "failure": f} for f in fails)
    return Report(records, failures)


def _named_items(corpus):
    for i, item in enumerate(corpus):
        if isinstance(item, tuple):
            yield item
        else:
            yield f"#{i}", item


def verify_lemma_suite(suite: str, corpus=None) -> Report:
    from .suites import run_suite
    return run_suite(suite, corpus)
