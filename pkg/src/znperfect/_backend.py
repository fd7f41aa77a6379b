"""Selects the compiled kernels when importable, else the pure-Python ones.

Set ``ZNPERFECT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

COMPILED_MAX_VERTICES = 64

try:
    if os.environ.get("ZNPERFECT_PURE_PYTHON"):
        raise ImportError("pure Python forced by environment")
    from . import _kernels as compiled
except ImportError:
    compiled = None

BACKEND = "cython" if compiled is not None else "python"


def kernels_for(vertex_count: int):
    """Kernel module able to handle a graph of ``vertex_count`` vertices."""
    if compiled is not None and vertex_count <= COMPILED_MAX_VERTICES:
        return compiled
    return _kernels_py
