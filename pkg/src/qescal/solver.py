"""Finite-difference verification engine for radial eigenproblems.

Discretizes -d^2/dr^2 + V(r) with the 3-point Laplacian on a truncated
interval with Dirichlet ends, extracts the low spectrum by Sturm-sequence
bisection (no QR/Lanczos dependency), refines eigenvalues by Richardson
extrapolation across a grid halving, and recovers eigenvectors by shifted
inverse iteration.  Adaptive Gauss-Legendre quadrature handles norms and
overlaps.  Everything is deterministic: identical inputs give bit-identical
outputs.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import _kernels

KERNEL_BACKEND = _kernels.BACKEND_NAME


class SolverError(RuntimeError):
    pass


class QuadratureError(RuntimeError):
    pass


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on (r_min, r_max) with Dirichlet conditions at both ends.

    The n_points nodes are strictly interior (r_min + (i+1) h), so the
    potential is never evaluated on the boundary.
    """

    r_min: float
    r_max: float
    n_points: int

    def __post_init__(self) -> None:
        if self.n_points < 3:
            raise ValueError("grid needs at least 3 interior points")
        if not self.r_min < self.r_max:
            raise ValueError("grid requires r_min < r_max")
        if self.r_min < 0:
            raise ValueError("grid requires r_min >= 0")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.n_points + 1)

    def nodes(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(1, self.n_points + 1)


def radial_grid(r_max: float = 12.0, n_points: int = 4000) -> GridSpec:
    """Default radial grid: inner Dirichlet wall one step off the origin.

    Solving r_min = h gives h = r_max / (n_points + 2); the r^-2 terms of the
    potentials are then never evaluated at the singularity, and doubling via
    ``refined`` halves h exactly.
    """
    h = r_max / (n_points + 2)
    return GridSpec(h, r_max, n_points)


def refined(grid: GridSpec) -> GridSpec:
    """Grid with exactly half the step.

    Radial grids couple r_min to h, so they are rebuilt with n -> 2n + 2
    (which halves h and moves the inner wall to the new h); other grids keep
    their endpoints and go to 2n + 1 interior points.
    """
    if grid.r_min > 0 and abs(grid.r_min - grid.h) < 1e-12 * grid.h:
        return radial_grid(grid.r_max, 2 * grid.n_points + 2)
    return GridSpec(grid.r_min, grid.r_max, 2 * grid.n_points + 1)


@dataclass(frozen=True)
class Tridiag:
    """Symmetric tridiagonal operator; arrays are frozen for safe sharing."""

    diag: np.ndarray
    off: np.ndarray

    def __post_init__(self) -> None:
        diag = np.ascontiguousarray(self.diag, dtype=np.float64)
        off = np.ascontiguousarray(self.off, dtype=np.float64)
        if off.shape[0] != max(diag.shape[0] - 1, 0):
            raise ValueError("off-diagonal length must be n - 1")
        diag.setflags(write=False)
        off.setflags(write=False)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "off", off)

    @property
    def n(self) -> int:
        return self.diag.shape[0]

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        if self.n > 1:
            out[:-1] += self.off * v[1:]
            out[1:] += self.off * v[:-1]
        return out

    def norm_inf(self) -> float:
        rows = np.abs(self.diag).copy()
        if self.n > 1:
            rows[:-1] += np.abs(self.off)
            rows[1:] += np.abs(self.off)
        return float(np.max(rows))


def discretize(potential: Callable[[float], float], grid: GridSpec) -> Tridiag:
    """Second-order 3-point discretization: diag 2/h^2 + V(r_i), off -1/h^2."""
    h = grid.h
    nodes = grid.nodes()
    v = np.array([float(potential(float(r))) for r in nodes])
    if not np.all(np.isfinite(v)):
        bad = nodes[~np.isfinite(v)][0]
        raise ValueError(f"potential is not finite at grid node r={bad}")
    diag = 2.0 / (h * h) + v
    off = np.full(grid.n_points - 1, -1.0 / (h * h))
    return Tridiag(diag, off)


def sturm_count(t: Tridiag, lam: float) -> int:
    """Number of eigenvalues of t strictly below lam."""
    return int(_kernels.count_below(t.diag, t.off, lam))


def lowest_eigenvalues(
    t: Tridiag, count: int, rel_tol: float = 1e-12, workers: int = 1
) -> list[float]:
    """The count smallest eigenvalues, ascending, each bisected to rel_tol * scale.

    Brackets for distinct indices are independent, so workers > 1 splits them
    across threads (the compiled kernels release the GIL); results do not
    depend on the worker count.
    """
    if count < 1 or count > t.n:
        raise ValueError(f"eigenvalue count must be in 1..{t.n}, got {count}")
    indices = np.arange(count, dtype=np.int64)
    if workers <= 1 or count == 1:
        values = _kernels.bisect_indices(t.diag, t.off, indices, rel_tol)
        return [float(v) for v in values]
    chunks = np.array_split(indices, min(workers, count))
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(lambda ix: _kernels.bisect_indices(t.diag, t.off, ix, rel_tol), chunks))
    out = np.concatenate(parts)
    return [float(v) for v in out]


def eigenvector(t: Tridiag, lam: float, max_iters: int = 24, rel_residual: float = 1e-8) -> np.ndarray:
    """Unit eigenvector by shifted inverse iteration.

    Requires lam within ~1e-6 of a true eigenvalue; raises SolverError if the
    residual norm does not reach rel_residual * ||T|| within the iteration cap.
    """
    scale = t.norm_inf()
    v = np.full(t.n, 1.0 / np.sqrt(t.n))
    for _ in range(max_iters):
        w = _kernels.solve_shifted(t.diag, t.off, lam, v)
        norm = float(np.linalg.norm(w))
        if not np.isfinite(norm) or norm == 0.0:
            raise SolverError("inverse iteration produced a degenerate vector")
        v = w / norm
        residual = float(np.linalg.norm(t.matvec(v) - lam * v))
        if residual <= rel_residual * scale:
            imax = int(np.argmax(np.abs(v)))
            return v if v[imax] > 0 else -v
    raise SolverError(
        f"inverse iteration did not converge (residual {residual:.3e} > {rel_residual:.1e} * ||T||)"
    )


def richardson(e_h: float, e_h2: float) -> float:
    """Eliminate the O(h^2) error from estimates at steps h and h/2."""
    return (4.0 * e_h2 - e_h) / 3.0


def richardson_pair(e1: float, h1: float, e2: float, h2: float) -> float:
    """Richardson extrapolation for an arbitrary step ratio (O(h^2) model)."""
    r2 = (h1 / h2) ** 2
    return (r2 * e2 - e1) / (r2 - 1.0)


# -- adaptive quadrature ---------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)
_MAX_QUAD_DEPTH = 48


def _gl_panel(f: Callable[[float], float], a: float, b: float) -> float:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return float(half * sum(w * f(mid + half * x) for x, w in zip(_GL_NODES, _GL_WEIGHTS)))


def integrate(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10) -> float:
    """Adaptive composite Gauss-Legendre: halve intervals until the two-panel
    estimate moves by less than tol; exceeding the depth cap signals an
    integrand that looks non-integrable."""

    def recurse(lo: float, hi: float, whole: float, budget: float, depth: int) -> float:
        mid = 0.5 * (lo + hi)
        left = _gl_panel(f, lo, mid)
        right = _gl_panel(f, mid, hi)
        if abs(left + right - whole) <= budget:
            return left + right
        if depth >= _MAX_QUAD_DEPTH:
            raise QuadratureError(f"quadrature depth cap hit on [{lo}, {hi}]")
        return recurse(lo, mid, left, budget / 2, depth + 1) + recurse(
            mid, hi, right, budget / 2, depth + 1
        )

    if a == b:
        return 0.0
    return recurse(a, b, _gl_panel(f, a, b), tol, 0)


# -- spectrum reports ---------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumReport:
    """Analytic vs numeric eigenvalues with relative errors."""

    analytic: tuple[Fraction, ...]
    numeric: tuple[float, ...]
    numeric_refined: tuple[float, ...]
    extrapolated: tuple[float, ...]
    rel_errors: tuple[float, ...]
    grid: GridSpec
    grid_refined: GridSpec

    def max_rel_error(self) -> float:
        return max(self.rel_errors)

    def to_json_dict(self) -> dict:
        return {
            "analytic": [str(e) for e in self.analytic],
            "analytic_float": [float(e) for e in self.analytic],
            "numeric": list(self.numeric),
            "numeric_refined": list(self.numeric_refined),
            "extrapolated": list(self.extrapolated),
            "rel_errors": list(self.rel_errors),
            "grid": {
                "r_min": self.grid.r_min,
                "r_max": self.grid.r_max,
                "n_points": self.grid.n_points,
                "h": self.grid.h,
            },
            "grid_refined": {
                "r_min": self.grid_refined.r_min,
                "r_max": self.grid_refined.r_max,
                "n_points": self.grid_refined.n_points,
                "h": self.grid_refined.h,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def solve_spectrum(
    potential: Callable[[float], float],
    analytic: Sequence[Fraction],
    grid: GridSpec,
    grid_refined: GridSpec | None = None,
    workers: int = 1,
) -> SpectrumReport:
    """Compute, refine, extrapolate and compare the lowest len(analytic) levels."""
    fine = grid_refined if grid_refined is not None else refined(grid)
    count = len(analytic)
    coarse_vals = lowest_eigenvalues(discretize(potential, grid), count, workers=workers)
    fine_vals = lowest_eigenvalues(discretize(potential, fine), count, workers=workers)
    extrap = [
        richardson_pair(e1, grid.h, e2, fine.h) for e1, e2 in zip(coarse_vals, fine_vals)
    ]
    rel = [abs(x - float(e)) / abs(float(e)) for x, e in zip(extrap, analytic)]
    return SpectrumReport(
        analytic=tuple(Fraction(e) for e in analytic),
        numeric=tuple(coarse_vals),
        numeric_refined=tuple(fine_vals),
        extrapolated=tuple(extrap),
        rel_errors=tuple(rel),
        grid=grid,
        grid_refined=fine,
    )
