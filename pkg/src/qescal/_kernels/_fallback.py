"""Pure-Python kernels mirroring the compiled module's interface.

Correct but slow for large grids; ``bisect_indices`` recovers most of the
loss by bisecting all requested eigenvalue brackets in lockstep, so the
O(n) Sturm sweep is shared across brackets.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

_TINY = float(np.finfo(np.float64).tiny)
_MAX_BISECT_ITERS = 256


def _pivmin(off: np.ndarray) -> float:
    if off.size == 0:
        return _TINY
    return _TINY * max(1.0, float(np.max(off * off)))


def count_below(diag: np.ndarray, off: np.ndarray, lam: float) -> int:
    """Number of eigenvalues of the symmetric tridiagonal matrix below lam."""
    pivmin = _pivmin(off)
    d = diag[0] - lam
    if abs(d) < pivmin:
        d = -pivmin
    count = 1 if d < 0.0 else 0
    for i in range(1, diag.shape[0]):
        d = diag[i] - lam - off[i - 1] * off[i - 1] / d
        if abs(d) < pivmin:
            d = -pivmin
        if d < 0.0:
            count += 1
    return count


def _counts_many(diag: np.ndarray, off: np.ndarray, lams: np.ndarray) -> np.ndarray:
    pivmin = _pivmin(off)
    d = diag[0] - lams
    d = np.where(np.abs(d) < pivmin, -pivmin, d)
    counts = (d < 0.0).astype(np.int64)
    off2 = off * off
    for i in range(1, diag.shape[0]):
        d = diag[i] - lams - off2[i - 1] / d
        d = np.where(np.abs(d) < pivmin, -pivmin, d)
        counts += d < 0.0
    return counts


def _gershgorin(diag: np.ndarray, off: np.ndarray) -> tuple[float, float]:
    radius = np.zeros_like(diag)
    if off.size:
        radius[:-1] += np.abs(off)
        radius[1:] += np.abs(off)
    lo = float(np.min(diag - radius))
    hi = float(np.max(diag + radius))
    hi += 1e-3 * max(1.0, abs(hi))  # ensure count(hi) == n even with an eigenvalue on the bound
    return lo, hi


def bisect_indices(
    diag: np.ndarray, off: np.ndarray, indices: np.ndarray, rel_tol: float = 1e-12
) -> np.ndarray:
    """Eigenvalues with the given ascending-order indices, by Sturm bisection."""
    indices = np.asarray(indices, dtype=np.int64)
    glo, ghi = _gershgorin(diag, off)
    lo = np.full(indices.shape, glo)
    hi = np.full(indices.shape, ghi)
    for _ in range(_MAX_BISECT_ITERS):
        scale = np.maximum(1.0, np.maximum(np.abs(lo), np.abs(hi)))
        active = (hi - lo) > rel_tol * scale
        if not active.any():
            break
        mid = 0.5 * (lo + hi)
        counts = _counts_many(diag, off, mid)
        go_down = counts > indices
        hi = np.where(active & go_down, mid, hi)
        lo = np.where(active & ~go_down, mid, lo)
    return 0.5 * (lo + hi)


def solve_shifted(diag: np.ndarray, off: np.ndarray, lam: float, rhs: np.ndarray) -> np.ndarray:
    """Solve (T - lam I) x = rhs by the Thomas algorithm with a pivot floor.

    The floor (machine epsilon times the matrix scale, the classic inverse-
    iteration fix) keeps the sweep finite when lam sits on an eigenvalue;
    inverse iteration only needs the solve direction, not its magnitude.
    """
    n = diag.shape[0]
    eps = float(np.finfo(np.float64).eps)
    pivmin = eps * float(np.max(np.abs(diag)) + np.max(np.abs(off), initial=0.0) + abs(lam))
    c = np.empty(n - 1) if n > 1 else np.empty(0)
    x = np.array(rhs, dtype=np.float64)
    d = diag[0] - lam
    if abs(d) < pivmin:
        d = pivmin if d >= 0 else -pivmin
    for i in range(n - 1):
        c[i] = off[i] / d
        x[i] /= d
        d = diag[i + 1] - lam - off[i] * c[i]
        if abs(d) < pivmin:
            d = pivmin if d >= 0 else -pivmin
        x[i + 1] -= off[i] * x[i]
    x[n - 1] /= d
    for i in range(n - 2, -1, -1):
        x[i] -= c[i] * x[i + 1]
    return x
