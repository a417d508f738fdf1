"""Cross-check against the point-canonical-transformation route.

The m = 1 member of the rationally extended oscillator family obtained by
point canonical transformations,

    V1(r) = r^2 + l(l+1)/r^2 - 8/(2 r^2 + 2l + 1) + 32 r^2 / (2 r^2 + 2l + 1)^2,

coincides with the minus-sector partner potential when l = alpha + 1 and
g1 = 2/(2 alpha + 3), up to the additive constant 2 alpha + 5 that the PCT
convention drops.  Its bound states are the same exceptional-Laguerre
wavefunctions, indexed so that level n carries the degree-(n+1) polynomial.
Only m = 1 is in scope here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polys import Scalar, exceptional_laguerre, laguerre, rising
from .susy import (
    PotentialSpec,
    QuasiPolyWave,
    SuperPotentialParams,
    WaveScale,
    canonical_wave,
    partner_potential,
)


@dataclass(frozen=True)
class PCTSpec:
    """Angular parameter of the m = 1 rationally extended oscillator."""

    l: Fraction
    m: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "l", Fraction(self.l))
        if self.m != 1:
            raise ValueError("only the m = 1 member is in scope")
        if 2 * self.l + 1 <= 0:
            raise ValueError("need 2l + 1 > 0 so the rational terms stay regular")

    @classmethod
    def matching(cls, params: SuperPotentialParams) -> "PCTSpec":
        """The l = alpha + 1 choice under which V1 matches the minus sector."""
        return cls(params.alpha + 1)


def v1_potential(spec: PCTSpec, r: float) -> float:
    """V1(r) for r > 0."""
    if r <= 0:
        raise ValueError("V1 is defined for r > 0")
    l = float(spec.l)
    u = r * r
    q = 2.0 * u + 2.0 * l + 1.0
    return u + l * (l + 1.0) / u - 8.0 / q + 32.0 * u / (q * q)


def v1_potential_spec(spec: PCTSpec) -> PotentialSpec:
    return PotentialSpec("v1_pct", lambda r: v1_potential(spec, r), label=f"V1(l={spec.l})")


def spectra_shift(alpha: Scalar) -> Fraction:
    """The additive constant by which the minus-sector potential exceeds V1."""
    return 2 * Fraction(alpha) + 5


def compare_v1_vminus(params: SuperPotentialParams, rs: Sequence[float]) -> dict:
    """Tabulate V- - V1 with l = alpha + 1 over a grid of radii.

    Returns the mean difference, the worst deviation from it, and the
    analytically derived shift 2 alpha + 5 it must equal.
    """
    spec = PCTSpec.matching(params)
    diffs = [partner_potential(params, "minus", float(r)) - v1_potential(spec, float(r)) for r in rs]
    constant = sum(diffs) / len(diffs)
    max_dev = max(abs(d - constant) for d in diffs)
    return {
        "alpha": str(params.alpha),
        "l": str(spec.l),
        "constant": constant,
        "max_deviation": max_dev,
        "expected_constant": float(spectra_shift(params.alpha)),
    }


def pct_energy(spec: PCTSpec, n: int) -> Fraction:
    """PCT-convention level 4n + 2l + 3 (no additive constant in V1)."""
    if n < 0:
        raise ValueError("level index must be nonnegative")
    return 4 * n + 2 * spec.l + 3


def pct_wavefunction(spec: PCTSpec, n: int) -> QuasiPolyWave:
    """Level-n bound state of V1:

        N_{n,1} r^(l+1) e^(-r^2/2) Lhat_{n+1,1}^(l+1/2)(r^2) / L_1^(l-1/2)(-r^2).

    The normalization factor contains (n-1)!, so it is only defined
    for n >= 1; lower levels are returned unnormalized.  With l = alpha + 1
    the shape is identical to the minus-sector eigenfunction of the same n.
    """
    if n < 0:
        raise ValueError("level index must be nonnegative")
    l = spec.l
    num = exceptional_laguerre(n + 1, 1, l + Fraction(1, 2))
    den = laguerre(1, l - Fraction(1, 2)).scale_arg(-1)  # u + l + 1/2
    if n >= 1:
        scale = WaveScale(
            Fraction(1),
            Fraction(math.factorial(n - 1))
            / ((l + Fraction(1, 2) + n) * rising(l - Fraction(1, 2), n)),
            gamma_arg=l - Fraction(1, 2),
            gamma_half=-1,
        )
    else:
        scale = WaveScale(Fraction(1))
    return canonical_wave(scale, l + 1, num, den)


def comparison_report(params: SuperPotentialParams, rs: Sequence[float]) -> dict:
    """JSON-ready record of the V1 versus V- comparison."""
    data = compare_v1_vminus(params, rs)
    data["spectra_shift"] = str(spectra_shift(params.alpha))
    return data
