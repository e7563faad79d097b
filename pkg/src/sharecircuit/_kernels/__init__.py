"""Kernel backend selection.

The compiled Cython extension is preferred; the pure-Python twin is used
when the extension is missing or when SHARECIRCUIT_PURE is set in the
environment. Both expose the same two functions.
"""

import os

if os.environ.get("SHARECIRCUIT_PURE"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

maxflow_unit = _impl.maxflow_unit
gf_rank = _impl.gf_rank

__all__ = ["maxflow_unit", "gf_rank", "BACKEND"]
