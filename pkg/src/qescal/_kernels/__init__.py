"""Kernel backend selection: compiled extension when available, pure Python otherwise.

Set ``QESCAL_PURE=1`` to force the pure-Python kernels (used by the backend
parity tests and the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("QESCAL_PURE", "") == "1":
    from . import _fallback as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as _impl

BACKEND_NAME: str = _impl.BACKEND_NAME
count_below = _impl.count_below
bisect_indices = _impl.bisect_indices
solve_shifted = _impl.solve_shifted
