"""Kernel dispatch: the compiled Cython core when importable, else pure Python.

Set ``OCOVER_PURE_PYTHON=1`` to force the fallback.  ``IMPLEMENTATION`` names
the active backend.
"""
import os
from contextlib import contextmanager

from . import _pykernels

COMPLETE = _pykernels.COMPLETE
STOPPED = _pykernels.STOPPED
BUDGET = _pykernels.BUDGET

_c = None
if not os.environ.get("OCOVER_PURE_PYTHON"):
    try:
        from . import _ckernels as _c
    except ImportError:  # extension not built
        _c = None

IMPLEMENTATION = "cython" if _c is not None else "python"
MAX_COMPILED_EDGES = 64


def backend(name=None):
    """The kernel module for ``name`` ("cython"/"python"), default active."""
    if name is None:
        name = IMPLEMENTATION
    if name == "cython":
        if _c is None:
            raise ImportError("compiled kernels are not available")
        return _c
    if name == "python":
        return _pykernels
    raise ValueError(f"unknown kernel backend {name!r}")


@contextmanager
def use_backend(name):
    """Route every kernel call through one backend for the duration of the block."""
    global _c
    saved = _c
    mod = backend(name)
    _c = mod if mod is not _pykernels else None
    try:
        yield mod
    finally:
        _c = saved


def _pick(n_edges):
    if _c is not None and n_edges <= MAX_COMPILED_EDGES:
        return _c
    return _pykernels


def perfect_matchings(n, edges, incidence):
    return _pick(len(edges)).perfect_matchings(n, edges, incidence)


def multicover(rows, n_edges, need, max_rows, exact, callback, budget=0):
    return _pick(n_edges).multicover(rows, n_edges, need, max_rows, exact, callback, budget)


def sign_search(n_vars, constraints, callback, budget=0):
    return (_c or _pykernels).sign_search(n_vars, constraints, callback, budget)


def flow_search(n_vertices, edges, options, n_parts, callback, budget=0):
    return (_c or _pykernels).flow_search(n_vertices, edges, options, n_parts, callback, budget)
