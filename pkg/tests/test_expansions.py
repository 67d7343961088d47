import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_nx
from symmetry_atlas import families as fam
from symmetry_atlas.expansions import (
    C4,
    c4_expansion,
    clique_expansion,
    contract,
    enumerate_c4_expansions,
    find_pattern_partitions,
    h_expansion,
    k_expansion,
    natural_ports,
)
from symmetry_atlas.graph import complete, complete_bipartite, cycle, path
from symmetry_atlas.symmetry import (
    canonical_form,
    is_arc_transitive,
    is_edge_transitive,
    is_isomorphic,
    is_vertex_transitive,
)


def _walk_key(h):
    # sorted per-vertex closed-walk counts; regular graphs defeat plain WL hashing
    a = nx.to_numpy_array(h, nodelist=sorted(h), dtype=np.int64)
    p = a.copy()
    cols = []
    for _ in range(7):
        p = p @ a
        cols.append(np.diagonal(p).copy())
    return tuple(sorted(zip(*cols)))


def _random_ports(g, r, rng):
    return [rng.sample(range(r), r) for _ in range(g.n)]


class TestCliqueExpansion:
    @pytest.mark.parametrize("length", range(3, 9))
    def test_cycle(self, length):
        assert is_isomorphic(clique_expansion(cycle(length)), cycle(2 * length)) is not None

    def test_k4(self):
        x = clique_expansion(complete(4))
        assert x.n == 12 and x.is_regular(3)

    def test_petersen(self):
        assert is_vertex_transitive(clique_expansion(fam.petersen()))

    def test_matches_networkx_construction(self):
        # arcs as vertices, reversal pairs plus same-tail pairs
        g = fam.cube()
        h = nx.Graph()
        arcs = [a for u, v in g.edges() for a in ((u, v), (v, u))]
        h.add_nodes_from(arcs)
        for u, v in arcs:
            h.add_edge((u, v), (v, u))
            for w in g.neighbors(u):
                if w != v:
                    h.add_edge((u, v), (u, w))
        assert nx.is_isomorphic(h, to_nx(clique_expansion(g)))


class TestHExpansion:
    @pytest.mark.parametrize("graph", [fam.cube(), fam.petersen(), complete(4), fam.octahedron()])
    def test_complete_h_matches_clique_expansion(self, graph):
        r = graph.degree(0)
        rng = random.Random(r)
        x = h_expansion(graph, complete(r), _random_ports(graph, r, rng))
        assert is_isomorphic(x, clique_expansion(graph)) is not None

    def test_octahedron_c4(self):
        x = h_expansion(fam.octahedron(), C4, natural_ports(fam.octahedron()))
        assert x.n == 24 and x.is_regular(3)

    def test_matching_edges_are_disjoint(self):
        g = fam.octahedron()
        x = h_expansion(g, C4, natural_ports(g))
        cross = [(u, v) for u, v in x.edges() if u // 4 != v // 4]
        ends = [w for e in cross for w in e]
        assert len(ends) == len(set(ends)) == x.n

    def test_k44_port_choices_differ(self):
        g = complete_bipartite(4, 4)
        words = set()
        for code in ([0] * 8, [1] * 8, [0, 1, 2, 0, 1, 2, 0, 1], [2] * 8):
            words.add(canonical_form(c4_expansion(g, code)).graph)
        assert len(words) >= 2

    def test_regularity_mismatch(self):
        with pytest.raises(ValueError):
            h_expansion(path(3), complete(2), [[0], [0, 1], [0]])

    def test_bad_ports(self):
        g = complete(4)
        with pytest.raises(ValueError):
            h_expansion(g, complete(3), [[0, 0, 1]] * 4)
        with pytest.raises(ValueError):
            h_expansion(g, complete(3), [[0, 1]] * 4)

    def test_mapping_ports(self):
        g = complete(4)
        ports = [{u: i for i, u in enumerate(g.neighbors(v))} for v in range(4)]
        assert h_expansion(g, complete(3), ports) == k_expansion(g)


class TestC4Expansions:
    # counts frozen from an unfiltered canonical-form enumeration over all 3^n codes
    @pytest.mark.parametrize("graph, count", [
        (fam.octahedron(), 2),
        (complete_bipartite(4, 4), 2),
        (fam.line_graph_cube(), 3),
    ])
    def test_vertex_transitive_counts(self, graph, count):
        assert len(enumerate_c4_expansions(graph)) == count

    def test_unfiltered_octahedron(self):
        assert len(enumerate_c4_expansions(fam.octahedron(), filter_vertex_transitive=False)) == 38

    def test_unfiltered_against_networkx_dedupe(self):
        g = fam.octahedron()
        buckets = {}
        for code in range(3 ** 6):
            digits = [(code // 3 ** i) % 3 for i in range(6)]
            h = to_nx(c4_expansion(g, digits))
            bucket = buckets.setdefault(_walk_key(h), [])
            if not any(nx.vf2pp_is_isomorphic(h, r) for r in bucket):
                bucket.append(h)
        reps = [h for b in buckets.values() for h in b]
        assert len(reps) == 38

    @pytest.mark.parametrize("graph", [fam.octahedron(), complete_bipartite(4, 4), fam.line_graph_cube()])
    def test_outputs(self, graph):
        for x in enumerate_c4_expansions(graph):
            assert x.is_regular(3) and x.n == 4 * graph.n
            assert is_vertex_transitive(x)
            assert not is_edge_transitive(x)

    def test_prefilter_loses_nothing(self):
        g = complete_bipartite(4, 4)
        every = enumerate_c4_expansions(g, filter_vertex_transitive=False)
        assert enumerate_c4_expansions(g) == {x for x in every if is_vertex_transitive(x)}

    def test_not_4_regular(self):
        with pytest.raises(ValueError):
            enumerate_c4_expansions(fam.cube())


class TestPartitions:
    def test_unique_k3_partition(self):
        assert len(find_pattern_partitions(clique_expansion(fam.cube()), "K3")) == 1

    def test_triangle_free(self):
        assert find_pattern_partitions(fam.cube(), "K3") == set()

    def test_divisibility(self):
        assert find_pattern_partitions(complete(4), "K3") == set()

    def test_k4_partition_of_k_expansion(self):
        x = k_expansion(fam.octahedron())
        parts = find_pattern_partitions(x, "K4")
        assert len(parts) == 1

    def test_c4_partition(self):
        g = fam.line_graph_cube()
        for x in enumerate_c4_expansions(g):
            parts = find_pattern_partitions(x, "C4")
            assert parts
            assert any(is_isomorphic(contract(x, p), g) is not None for p in parts)

    def test_unknown_pattern(self):
        with pytest.raises(ValueError):
            find_pattern_partitions(fam.cube(), "K5")

    @pytest.mark.parametrize("graph", [fam.cube(), fam.petersen(), complete(4), fam.dodecahedron(),
                                       complete_bipartite(3, 3)])
    def test_contract_round_trip(self, graph):
        x = clique_expansion(graph)
        (p,) = find_pattern_partitions(x, "K3")
        assert is_isomorphic(contract(x, p), graph) is not None

    @settings(max_examples=25)
    @given(st.randoms(use_true_random=False))
    def test_random_c4_expansion_contracts_back(self, rng):
        g = fam.octahedron()
        x = h_expansion(g, C4, _random_ports(g, 4, rng))
        parts = find_pattern_partitions(x, "C4")
        assert any(is_isomorphic(contract(x, p), g) is not None for p in parts)


class TestExpansionTransitivity:
    @pytest.mark.parametrize("graph", [fam.cube(), fam.petersen(), complete(4), fam.prism(5),
                                       fam.moebius(4), fam.dodecahedron(), complete_bipartite(3, 3)])
    def test_vertex_transitive_iff_arc_transitive(self, graph):
        assert is_vertex_transitive(clique_expansion(graph)) == is_arc_transitive(graph)

    @pytest.mark.parametrize("graph", [complete(4), fam.cube(), fam.petersen()])
    def test_iterated_expansion_is_not_vertex_transitive(self, graph):
        assert not is_vertex_transitive(clique_expansion(clique_expansion(graph)))
