"""Tools for vertex-transitive graphs of low connectivity.

Graphs are immutable bitmask adjacency lists. The heavy kernels come from
a compiled extension when it is available and fall back to pure Python
otherwise (``SYMMETRY_ATLAS_PURE=1`` forces the fallback).
"""

from .classifier import Classification, classify, verify_characterization, verify_lemma_suite
from .graph import Graph, from_edge_list, line_graph
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .kernels import BACKEND
from .symmetry import (
    automorphism_group,
    canonical_form,
    is_arc_transitive,
    is_edge_transitive,
    is_isomorphic,
    is_vertex_transitive,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Classification",
    "Graph",
    "Graph6Error",
    "automorphism_group",
    "canonical_form",
    "classify",
    "emit_graph6",
    "from_edge_list",
    "is_arc_transitive",
    "is_edge_transitive",
    "is_isomorphic",
    "is_vertex_transitive",
    "line_graph",
    "parse_graph6",
    "verify_characterization",
    "verify_lemma_suite",
]
