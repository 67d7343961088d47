import pytest
from hypothesis import given
from hypothesis import strategies as st

from symmetry_atlas import families as fam
from symmetry_atlas.families import (
    CycleDecomposition,
    CyclePartition,
    FamilyMatch,
    build,
    check_family_axioms,
    construct_all,
    gluing_schemes,
    is_cycle_partition,
    recognize,
)
from symmetry_atlas.graph import (
    circulant,
    complete,
    complete_bipartite,
    cycle,
    cycle_power,
    line_graph,
    strong_product,
)
from symmetry_atlas.connectivity import is_quasi_4_connected
from symmetry_atlas.symmetry import is_arc_transitive, is_isomorphic, is_vertex_transitive


def _iso(a, b):
    return is_isomorphic(a, b) is not None


def _cube_rungs():
    order = [0, 2, 6, 4]
    bags = [frozenset({order[i], order[i] + 1, order[(i + 1) % 4], order[(i + 1) % 4] + 1}) for i in range(4)]
    return CycleDecomposition(tuple(bags))


class TestConstruction:
    @pytest.mark.parametrize("length", range(3, 9))
    def test_k4_bags(self, length):
        members = construct_all(fam.K4_BAGS, length)
        assert len(members) == 1
        assert _iso(members[0][0], strong_product(complete(2), cycle(length)))

    def test_k4_bags_length_3(self):
        assert _iso(construct_all(fam.K4_BAGS, 3)[0][0], complete(6))

    def test_c4_bags_length_4(self):
        graphs = [g for g, _ in construct_all(fam.C4_BAGS, 4)]
        assert len(graphs) == 2
        assert any(_iso(g, fam.cube()) for g in graphs)
        assert any(_iso(g, circulant(8, (1, 4))) for g in graphs)

    def test_k22_bags(self):
        assert [_iso(g, fam.octahedron()) for g, _ in construct_all(fam.K22_BAGS, 3)] == [True]
        assert [_iso(g, complete_bipartite(4, 4)) for g, _ in construct_all(fam.K22_BAGS, 4)] == [True]

    @pytest.mark.parametrize("length", range(4, 10))
    def test_triangle_bags(self, length):
        (member,) = construct_all(fam.TRIANGLE_BAGS, length)
        assert _iso(member[0], cycle_power(length, 2))

    def test_triangle_bags_length_5(self):
        assert _iso(construct_all(fam.TRIANGLE_BAGS, 5)[0][0], complete(5))

    def test_triangle_bags_length_6_is_octahedron(self):
        g = construct_all(fam.TRIANGLE_BAGS, 6)[0][0]
        assert _iso(g, fam.octahedron())
        assert is_arc_transitive(g)

    @pytest.mark.parametrize("family", fam.FAMILIES)
    @pytest.mark.parametrize("length", range(3, 11))
    def test_members_pass_axioms_and_are_transitive(self, family, length):
        if not fam.feasible(family, length):
            return
        for g, d in construct_all(family, length):
            ok, problems = check_family_axioms(g, d, family)
            assert ok, problems
            assert is_vertex_transitive(g)
            assert is_quasi_4_connected(g)
            assert g.n == fam.vertex_count(family, length)

    @pytest.mark.parametrize("family", fam.FAMILIES)
    @pytest.mark.parametrize("length", range(3, 9))
    def test_pairwise_non_isomorphic(self, family, length):
        if not fam.feasible(family, length):
            return
        graphs = [g for g, _ in construct_all(family, length)]
        for i, a in enumerate(graphs):
            for b in graphs[i + 1:]:
                assert not _iso(a, b)

    @pytest.mark.parametrize("family", [fam.C4_BAGS, fam.ALT_K4_C4, fam.ALT_K22_C4])
    @pytest.mark.parametrize("length", [4, 6])
    def test_gauge_reduction_keeps_every_class(self, family, length):
        reduced = [g for g, _ in construct_all(family, length)]
        full = [g for g, _ in construct_all(family, length, reduce=False)]
        assert len(reduced) == len(full)
        assert all(any(_iso(a, b) for b in full) for a in reduced)
        assert len(gluing_schemes(family, length)) <= len(gluing_schemes(family, length, reduce=False))

    def test_infeasible(self):
        with pytest.raises(ValueError):
            build(fam.ALT_K4_C4, 5)
        with pytest.raises(ValueError):
            build(fam.TRIANGLE_BAGS, 3)
        with pytest.raises(ValueError):
            fam.feasible("no-such-family", 4)

    def test_bad_scheme(self):
        with pytest.raises(ValueError):
            build(fam.C4_BAGS, 4, (0,))


class TestAxioms:
    def test_c6_square(self):
        g = cycle_power(6, 2)
        d = CycleDecomposition(tuple(frozenset({i, (i + 1) % 6, (i + 2) % 6}) for i in range(6)))
        ok, problems = check_family_axioms(g, d, fam.TRIANGLE_BAGS)
        assert ok, problems

    def test_cube_rungs(self):
        ok, problems = check_family_axioms(fam.cube(), _cube_rungs(), fam.C4_BAGS)
        assert ok, problems

    def test_k2_strong_c5_is_not_c4_bags(self):
        g, d = build(fam.K4_BAGS, 5)
        ok, problems = check_family_axioms(g, d, fam.C4_BAGS)
        assert not ok
        assert "a bag is not C4" in problems

    def test_not_quasi_4_connected(self):
        g = cycle(6)
        d = CycleDecomposition(tuple(frozenset({i, (i + 1) % 6, (i + 2) % 6}) for i in range(6)))
        ok, problems = check_family_axioms(g, d, fam.TRIANGLE_BAGS)
        assert not ok
        assert "graph is not quasi-4-connected" in problems

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            check_family_axioms(fam.cube(), _cube_rungs(), "nope")

    def test_cycle_partition(self):
        g = fam.prism(5)
        cp = CyclePartition(tuple(frozenset({2 * i, 2 * i + 1}) for i in range(5)))
        assert is_cycle_partition(g, cp)
        assert all(len(cp.adhesion_edges(g, t)) == 2 for t in range(5))
        assert not is_cycle_partition(g, CyclePartition(tuple(frozenset({i, i + 5}) for i in range(5))))


class TestRecognize:
    def test_k6(self):
        matches = recognize(complete(6))
        assert {(m.family, m.length) for m in matches} == {(fam.K4_BAGS, 3)}

    def test_cube(self):
        assert (fam.C4_BAGS, 4) in {(m.family, m.length) for m in recognize(fam.cube())}

    def test_petersen(self):
        assert recognize(fam.petersen()) == set()

    def test_line_graph_cube(self):
        assert fam.LINE_GRAPH_CUBE in {m.family for m in recognize(fam.line_graph_cube())}

    @pytest.mark.parametrize("family", fam.FAMILIES)
    @pytest.mark.parametrize("length", range(3, 9))
    def test_round_trip(self, family, length):
        if not fam.feasible(family, length):
            return
        for g, _ in construct_all(family, length):
            matches = recognize(g)
            assert (family, length) in {(m.family, m.length) for m in matches}
            for m in matches:
                if m.witness is not None:
                    ok, problems = check_family_axioms(g, m.witness, m.family)
                    assert ok, problems

    @given(st.permutations(list(range(16))))
    def test_witness_follows_relabelling(self, perm):
        g, _ = build(fam.K22_BAGS, 8)
        h = g.relabel(perm)
        (m,) = [m for m in recognize(h) if m.family == fam.K22_BAGS]
        assert check_family_axioms(h, m.witness, fam.K22_BAGS)[0]

    def test_match_json(self):
        m = FamilyMatch(fam.C4_BAGS, 4, 0, _cube_rungs())
        out = m.to_json()
        assert out["family"] == "cycle-of-C4-bags" and out["witness"]["length"] == 4


class TestNamed:
    def test_line_graph_cube(self):
        g = fam.named("line_graph_cube")
        assert g == line_graph(fam.cube())[0]
        assert g.n == 12 and g.is_regular(4)

    def test_prism(self):
        assert fam.named("K3□K2") == fam.prism(3)

    def test_octahedron(self):
        assert _iso(fam.named("octahedron"), circulant(6, (1, 2)))

    @pytest.mark.parametrize("name, params, n, m", [
        ("K5", (), 5, 10), ("C7", (), 7, 7), ("K3,4", (), 7, 12), ("complete", (4,), 4, 6),
        ("prism(5)", (), 10, 15), ("moebius", (4,), 8, 12), ("petersen", (), 10, 15),
        ("dodecahedron", (), 20, 30), ("wagner", (), 8, 12),
    ])
    def test_sizes(self, name, params, n, m):
        g = fam.named(name, *params)
        assert (g.n, g.m) == (n, m)

    def test_dodecahedron_is_arc_transitive(self):
        assert is_arc_transitive(fam.dodecahedron())

    def test_unknown(self):
        with pytest.raises(ValueError):
            fam.named("heawood")
        with pytest.raises(ValueError):
            fam.moebius(1)
