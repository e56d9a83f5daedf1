"""Kernel backend selection.

The compiled extension is used when it importable; the pure-Python
implementation is the fallback. Set BOMBRL_PURE_KERNELS=1 to force the
fallback (used by the parity tests and the benchmark).
"""

from __future__ import annotations

import os

_force_pure = os.environ.get("BOMBRL_PURE_KERNELS", "0") not in ("", "0")

if _force_pure:
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from bombrl import _gridkernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

dijkstra_fill = _impl.dijkstra_fill
astar_search = _impl.astar_search


def backend_name() -> str:
    return BACKEND
