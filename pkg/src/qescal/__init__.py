"""Verification workbench for a quasi-exactly-solvable extension of the
rational Calogero model: exact spectra and wavefunctions built from
exceptional X1 Laguerre polynomials, confirmed independently by
finite-difference eigensolvers and residual checks."""

from .polys import (
    RatFun,
    RatPoly,
    count_positive_roots,
    count_real_roots,
    exceptional_laguerre,
    laguerre,
    laguerre_derivative,
    poly_eval,
)
from .solver import (
    GridSpec,
    KERNEL_BACKEND,
    SpectrumReport,
    Tridiag,
    discretize,
    eigenvector,
    integrate,
    lowest_eigenvalues,
    radial_grid,
    richardson,
    solve_spectrum,
    sturm_count,
)
from .susy import (
    QuasiPolyWave,
    SuperPotentialParams,
    SusyPhase,
    analytic_energy,
    apply_ladder,
    chi_minus,
    chi_plus,
    classify_susy,
    make_params,
    partner_potential,
    schrodinger_residual,
    superpotential,
)

__version__ = "0.1.0"

__all__ = [
    "GridSpec",
    "KERNEL_BACKEND",
    "QuasiPolyWave",
    "RatFun",
    "RatPoly",
    "SpectrumReport",
    "SuperPotentialParams",
    "SusyPhase",
    "Tridiag",
    "analytic_energy",
    "apply_ladder",
    "chi_minus",
    "chi_plus",
    "classify_susy",
    "count_positive_roots",
    "count_real_roots",
    "discretize",
    "eigenvector",
    "exceptional_laguerre",
    "integrate",
    "laguerre",
    "laguerre_derivative",
    "lowest_eigenvalues",
    "make_params",
    "partner_potential",
    "poly_eval",
    "radial_grid",
    "richardson",
    "schrodinger_residual",
    "solve_spectrum",
    "sturm_count",
    "superpotential",
]
