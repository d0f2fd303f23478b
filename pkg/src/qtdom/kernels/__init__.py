"""Kernel backend selector.

The hot inner loops (connectivity, exact total domination, canonical
labeling, quasi-vertex scan) exist twice: a numba-compiled version in
`qtdom.kernels.jit` and a pure-Python reference in `qtdom.kernels.pure`.
The env flag QTDOM_NUMBA picks the backend:

    QTDOM_NUMBA=0   force the pure backend
    QTDOM_NUMBA=1   require numba (ImportError if unavailable)
    unset           use numba when importable, else fall back quietly

`benchmarks/bench_kernels.py` times the two backends against each other.
"""

from __future__ import annotations

import os
import warnings

from . import pure

_flag = os.environ.get("QTDOM_NUMBA", "").strip().lower()


def _load_jit():
    if _flag in {"0", "false", "off", "no"}:
        return None
    try:
        import importlib

        return importlib.import_module(".jit", __package__)
    except ImportError:
        if _flag in {"1", "true", "on", "yes"}:
            raise
        warnings.warn("numba unavailable; using the pure-Python kernel backend")
        return None


jit = _load_jit()

_active = jit if jit is not None else pure

BACKEND = "numba" if jit is not None else "pure"

connected = _active.connected
connected_sub = _active.connected_sub
quasi_vertex_mask = _active.quasi_vertex_mask
gamma_t_solve = _active.gamma_t_solve
gamma_t_exhaustive = _active.gamma_t_exhaustive
canonical_rows = _active.canonical_rows


def backends():
    """(name, module) pairs for every available backend."""
    out = [("pure", pure)]
    if jit is not None:
        out.append(("numba", jit))
    return out
