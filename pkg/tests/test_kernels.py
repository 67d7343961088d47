import os
import random
import subprocess
import sys

import pytest

from symmetry_atlas import kernels
from symmetry_atlas.families import dodecahedron, line_graph_cube
from symmetry_atlas.graph import from_edge_list

BACKENDS = kernels.backends()
needs_compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled extension not built")


def _random_graphs(count, seed=11):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 14)
        p = rng.uniform(0.15, 0.7)
        yield from_edge_list(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def _edge_lists(g):
    return [u for u, _ in g.edges()], [v for _, v in g.edges()]


def test_backend_names():
    assert "python" in BACKENDS
    assert kernels.BACKEND in ("python", "cython")


@needs_compiled
def test_refine_parity():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for g in _random_graphs(120):
        cols = [0] * g.n
        cols[0] = 1
        assert py.refine(list(g.adj), cols) == cy.refine(list(g.adj), cols)


@needs_compiled
@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_separator_parity(k):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for g in _random_graphs(60, seed=k):
        assert sorted(py.separators(list(g.adj), k)) == sorted(cy.separators(list(g.adj), k))


@needs_compiled
@pytest.mark.parametrize("j", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("matching", [True, False])
def test_mixed_separator_parity(j, matching):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for g in _random_graphs(40, seed=100 + j):
        eu, ev = _edge_lists(g)
        a = py.mixed_separators(list(g.adj), eu, ev, j, 4 - j, matching)
        b = cy.mixed_separators(list(g.adj), eu, ev, j, 4 - j, matching)
        assert sorted(map(repr, a)) == sorted(map(repr, b))


@needs_compiled
@pytest.mark.parametrize("graph", [line_graph_cube(), dodecahedron()])
def test_named_parity(graph):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    eu, ev = _edge_lists(graph)
    for j in range(5):
        a = py.mixed_separators(list(graph.adj), eu, ev, j, 4 - j, True)
        b = cy.mixed_separators(list(graph.adj), eu, ev, j, 4 - j, True)
        assert sorted(map(repr, a)) == sorted(map(repr, b))


def test_limit():
    g = line_graph_cube()
    assert len(kernels.separators(g.adj, 4, 1)) == 1


def test_large_graphs_use_python():
    n = 70
    g = from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    assert len(kernels.separators(g.adj, 2)) == n * (n - 3) // 2


def test_pure_backend_switch():
    code = "import symmetry_atlas as s; print(s.BACKEND)"
    env = dict(os.environ, SYMMETRY_ATLAS_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
