"""Kernel dispatch: compiled ``_kernels`` when built, else ``_pykernels``.

Set ``SYMMETRY_ATLAS_PURE=1`` to force the Python implementation. Graphs
with more than 64 vertices always use it since the compiled kernels work
on 64-bit masks.
"""

import os

from . import _pykernels

_compiled = None
if os.environ.get("SYMMETRY_ATLAS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _pykernels.BACKEND
COMPILED_MAX_N = 64


def _pick(n):
    if _compiled is not None and n <= COMPILED_MAX_N:
        return _compiled
    return _pykernels


def refine(adj, colors):
    return _pick(len(adj)).refine(adj, colors)


def separators(adj, k, limit=0):
    return _pick(len(adj)).separators(adj, k, limit)


def mixed_separators(adj, eu, ev, j, f, matching=True, limit=0):
    impl = _pick(len(adj))
    if impl is _compiled and len(eu) > 2048:
        impl = _pykernels
    return impl.mixed_separators(adj, list(eu), list(ev), j, f, matching, limit)


def backends():
    """Available kernel modules keyed by backend name."""
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out
