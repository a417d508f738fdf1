"""Supersymmetric machinery for the conditionally solvable oscillator pair.

The superpotential W(r) = r + 2 g1 r / (1 + g1 r^2) + (alpha+1)/r generates a
partner pair (V+, V-) where V+ is the radial harmonic oscillator and V- its
rational extension; the pair is isospectral (broken supersymmetry) exactly
when g1 = 2/(2 alpha + 3).  Everything that can be exact here is exact:
wavefunctions are carried as r^s * exp(-r^2/2) times a reduced rational
function of u = r^2 with Fraction coefficients, and the ladder operators
A(+/-) = +/- d/dr + W act on that representation symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal

from .polys import (
    RatFun,
    RatPoly,
    Scalar,
    count_positive_roots,
    exceptional_laguerre,
    laguerre,
    poly_from_json,
    poly_to_json,
    rising,
)

Sector = Literal["plus", "minus"]
LadderDirection = Literal["plus", "minus"]

_U = RatPoly.x()  # the variable u = r^2


def _check_sector(sector: str) -> None:
    if sector not in ("plus", "minus"):
        raise ValueError(f"sector must be 'plus' or 'minus', got {sector!r}")


@dataclass(frozen=True)
class SuperPotentialParams:
    """Parameters (alpha, g1) of the superpotential.

    g1 is derived, never free: the conditional constraint g1 = 2/(2 alpha + 3)
    is what makes the minus-sector potential solvable.  ``g1_scale`` is a test
    hook for the solvability-sensitivity checks; any value other than 1
    deliberately breaks the constraint.
    """

    alpha: Fraction
    g1_scale: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "g1_scale", Fraction(self.g1_scale))
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.g1_scale <= 0:
            raise ValueError("g1_scale must be positive")

    @property
    def g1(self) -> Fraction:
        return self.g1_scale * Fraction(2) / (2 * self.alpha + 3)

    @property
    def is_solvable(self) -> bool:
        return self.g1_scale == 1


def make_params(alpha: Scalar | str) -> SuperPotentialParams:
    """Construct parameters with the conditional constraint enforced."""
    return SuperPotentialParams(Fraction(alpha))


def make_detuned_params(alpha: Scalar | str, g1_factor: Scalar | str) -> SuperPotentialParams:
    """Parameters with g1 multiplied by g1_factor: breaks exact solvability."""
    return SuperPotentialParams(Fraction(alpha), Fraction(g1_factor))


# -- pointwise evaluators ------------------------------------------------------


def superpotential(params: SuperPotentialParams, r: float) -> float:
    """W(r) for r > 0."""
    if r <= 0:
        raise ValueError("superpotential is defined for r > 0")
    g1 = float(params.g1)
    u = r * r
    return r + 2.0 * g1 * r / (1.0 + g1 * u) + (float(params.alpha) + 1.0) / r


def superpotential_prime(params: SuperPotentialParams, r: float) -> float:
    """dW/dr for r > 0."""
    if r <= 0:
        raise ValueError("superpotential is defined for r > 0")
    g1 = float(params.g1)
    u = r * r
    q = 1.0 + g1 * u
    return 1.0 + 2.0 * g1 / q - 4.0 * g1 * g1 * u / (q * q) - (float(params.alpha) + 1.0) / u


def factorized_potential(params: SuperPotentialParams, sector: Sector, r: float) -> float:
    """W(r)^2 +/- W'(r) — the factorization route to the partner potentials."""
    _check_sector(sector)
    w = superpotential(params, r)
    wp = superpotential_prime(params, r)
    return w * w + wp if sector == "plus" else w * w - wp


def partner_potential(params: SuperPotentialParams, sector: Sector, r: float) -> float:
    """Closed-form partner potential.

    V+ = r^2 + a(a+1)/r^2 + 2a + 7  (radial harmonic oscillator),
    V- = r^2 + (a+1)(a+2)/r^2 - 4 g1/(1+g1 r^2) + 8 g1^2 r^2/(1+g1 r^2)^2 + 2a + 5.

    Coincides with ``factorized_potential`` exactly when g1 is tuned.
    """
    _check_sector(sector)
    if r <= 0:
        raise ValueError("partner potentials are defined for r > 0")
    a = float(params.alpha)
    u = r * r
    if sector == "plus":
        return u + a * (a + 1.0) / u + 2.0 * a + 7.0
    g1 = float(params.g1)
    q = 1.0 + g1 * u
    return u + (a + 1.0) * (a + 2.0) / u - 4.0 * g1 / q + 8.0 * g1 * g1 * u / (q * q) + 2.0 * a + 5.0


def analytic_energy(params: SuperPotentialParams, sector: Sector, n: int) -> Fraction:
    """E_n = 4 (n + alpha + 5/2), identical for both sectors (broken SUSY)."""
    _check_sector(sector)
    if n < 0:
        raise ValueError("level index must be nonnegative")
    return 4 * (n + params.alpha + Fraction(5, 2))


def potential_fun(params: SuperPotentialParams, sector: Sector) -> RatFun:
    """The partner potential as an exact rational function of u = r^2."""
    _check_sector(sector)
    a = params.alpha
    if sector == "plus":
        return RatFun(_U) + RatFun(RatPoly.constant(a * (a + 1)), _U) + (2 * a + 7)
    g1 = params.g1
    denom = RatPoly((1, g1))  # 1 + g1 u
    return (
        RatFun(_U)
        + RatFun(RatPoly.constant((a + 1) * (a + 2)), _U)
        - RatFun(RatPoly.constant(4 * g1), denom)
        + RatFun(8 * g1 * g1 * _U, denom * denom)
        + (2 * a + 5)
    )


# -- wavefunction representation -------------------------------------------------


@dataclass(frozen=True)
class WaveScale:
    """Exact multiplicative constant rational * sqrt(root_of) * Gamma(arg)^(gamma_half/2).

    Keeping the pieces separate preserves exact ratios between wavefunctions
    related by ladder operators, whose energies enter under square roots.
    """

    rational: Fraction
    root_of: Fraction = Fraction(1)
    gamma_arg: Fraction | None = None
    gamma_half: int = 0

    def __post_init__(self) -> None:
        if self.root_of <= 0:
            raise ValueError("root_of must be positive")
        if self.gamma_half != 0 and self.gamma_arg is None:
            raise ValueError("gamma_half without gamma_arg")

    def value(self) -> float:
        out = float(self.rational) * math.sqrt(float(self.root_of))
        if self.gamma_half:
            out *= math.gamma(float(self.gamma_arg)) ** (self.gamma_half / 2.0)
        return out

    def scaled(self, rational: Fraction) -> "WaveScale":
        return WaveScale(self.rational * rational, self.root_of, self.gamma_arg, self.gamma_half)

    def ratio_squared(self, other: "WaveScale") -> Fraction:
        """Exact (self/other)^2; requires identical transcendental parts."""
        if (self.gamma_arg, self.gamma_half) != (other.gamma_arg, other.gamma_half):
            raise ValueError("scales carry different Gamma factors")
        return (self.rational / other.rational) ** 2 * (self.root_of / other.root_of)

    def same_sign(self, other: "WaveScale") -> bool:
        return (self.rational > 0) == (other.rational > 0)


@dataclass(frozen=True)
class QuasiPolyWave:
    """Radial wave of the closed family scale * r^power * exp(-r^2/2) * num(u)/den(u).

    Canonical form: num/den reduced, den monic with no positive real roots,
    num has constant term 1 (u-powers are folded into ``power``), and the
    sign of the wave as r -> 0+ lives in scale.rational.
    """

    scale: WaveScale
    power: Fraction
    num: RatPoly
    den: RatPoly

    def __post_init__(self) -> None:
        if self.den.degree > 0 and count_positive_roots(self.den) != 0:
            raise ValueError("wave denominator has a positive real root")

    def __call__(self, r: float) -> float:
        u = r * r
        radial = r ** float(self.power) if r != 0.0 else (0.0 if self.power > 0 else math.inf)
        return self.scale.value() * radial * math.exp(-u / 2.0) * self.num(u) / self.den(u)

    def ratio(self) -> RatFun:
        """The rational-function part num/den (scale and prefactor stripped)."""
        return RatFun(self.num, self.den)

    def same_shape(self, other: "QuasiPolyWave") -> bool:
        return self.power == other.power and self.num == other.num and self.den == other.den

    def node_count(self) -> int:
        """Number of zeros in u = r^2 on (0, inf), certified by a Sturm chain."""
        return count_positive_roots(self.num)


def canonical_wave(scale: WaveScale, power: Fraction, num: RatPoly, den: RatPoly) -> QuasiPolyWave:
    """Reduce to canonical form, folding content and u-powers into scale/power."""
    if num.is_zero:
        raise ValueError("zero wavefunction")
    fun = RatFun(num, den)  # reduces and makes den monic
    num, den = fun.num, fun.den
    low = num.lowest_index()
    if low:
        num = num.shift_down(low)
        power = power + 2 * low
    dlow = den.lowest_index()
    if dlow:
        den = den.shift_down(dlow)
        power = power - 2 * dlow
    c = num.coeffs[0]
    num = num * (1 / c)
    return QuasiPolyWave(scale.scaled(c), Fraction(power), num, den)


def wave_to_json(wave: QuasiPolyWave) -> dict:
    return {
        "scale": {
            "rational": str(wave.scale.rational),
            "root_of": str(wave.scale.root_of),
            "gamma_arg": None if wave.scale.gamma_arg is None else str(wave.scale.gamma_arg),
            "gamma_half": wave.scale.gamma_half,
            "value": wave.scale.value(),
        },
        "power": str(wave.power),
        "num": poly_to_json(wave.num),
        "den": poly_to_json(wave.den),
    }


def wave_from_json(data: dict) -> QuasiPolyWave:
    s = data["scale"]
    scale = WaveScale(
        Fraction(s["rational"]),
        Fraction(s["root_of"]),
        None if s["gamma_arg"] is None else Fraction(s["gamma_arg"]),
        int(s["gamma_half"]),
    )
    return QuasiPolyWave(scale, Fraction(data["power"]), poly_from_json(data["num"]), poly_from_json(data["den"]))


# -- the analytic eigenfunctions -------------------------------------------------


def chi_plus(params: SuperPotentialParams, n: int) -> QuasiPolyWave:
    """Oscillator-sector eigenfunction r^(alpha+1) e^(-r^2/2) L_n^(alpha+1/2)(r^2)."""
    if n < 0:
        raise ValueError("level index must be nonnegative")
    a = params.alpha
    scale = WaveScale(
        Fraction(1),
        Fraction(math.factorial(n)) / rising(a + Fraction(3, 2), n),
        gamma_arg=a + Fraction(3, 2),
        gamma_half=-1,
    )
    return canonical_wave(scale, a + 1, laguerre(n, a + Fraction(1, 2)), RatPoly.one())


def _chi_minus_scale(params: SuperPotentialParams, n: int) -> WaveScale:
    a = params.alpha
    energy = analytic_energy(params, "minus", n)
    return WaveScale(
        Fraction(1),
        4 * Fraction(math.factorial(n)) / (energy * rising(a + Fraction(3, 2), n)),
        gamma_arg=a + Fraction(3, 2),
        gamma_half=-1,
    )


def chi_minus_combination_form(params: SuperPotentialParams, n: int) -> QuasiPolyWave:
    """Minus-sector eigenfunction in the raw ladder form

        r^(alpha+2) e^(-r^2/2) [ (1+g1+g1 u)/(1+g1 u) L_n^(a+1/2)(u) + L_{n-1}^(a+3/2)(u) ]

    which is what A- applied to chi_plus produces for *any* g1 (tuned or not).
    """
    if n < 0:
        raise ValueError("level index must be nonnegative")
    a, g1 = params.alpha, params.g1
    bracket_num = RatPoly((1 + g1, g1)) * laguerre(n, a + Fraction(1, 2)) + RatPoly(
        (1, g1)
    ) * laguerre(n - 1, a + Fraction(3, 2))
    return canonical_wave(_chi_minus_scale(params, n), a + 2, bracket_num, RatPoly((1, g1)))


def chi_minus(params: SuperPotentialParams, n: int) -> QuasiPolyWave:
    """Minus-sector eigenfunction in exceptional-Laguerre form

        r^(alpha+2) e^(-r^2/2) Lhat_{n+1,1}^(alpha+3/2)(r^2) / L_1^(alpha+1/2)(-r^2).

    Also builds the ladder combination form and asserts exact equality of the
    two representations; a mismatch is an implementation bug (for tuned g1
    the equality is an algebraic identity).
    """
    if n < 0:
        raise ValueError("level index must be nonnegative")
    if not params.is_solvable:
        raise ValueError("exceptional-form chi_minus requires the tuned g1; use the combination form")
    a = params.alpha
    num = exceptional_laguerre(n + 1, 1, a + Fraction(3, 2))
    den = laguerre(1, a + Fraction(1, 2)).scale_arg(-1)  # u + alpha + 3/2
    wave = canonical_wave(_chi_minus_scale(params, n), a + 2, num, den)
    other = chi_minus_combination_form(params, n)
    if not (wave.same_shape(other) and wave.scale == other.scale):
        raise AssertionError("exceptional and ladder forms of chi_minus disagree")
    return wave


# -- ladder operators (exact) ------------------------------------------------------


def _superpotential_fun(params: SuperPotentialParams) -> RatFun:
    """r * W(r) as a rational function of u = r^2 (W has odd parity in r)."""
    a, g1 = params.alpha, params.g1
    return RatFun(_U) + RatFun(2 * g1 * _U, RatPoly((1, g1))) + (a + 1)


def _ddr(power: Fraction, fun: RatFun) -> tuple[Fraction, RatFun]:
    """d/dr of r^power e^(-u/2) f(u), expressed at power-1."""
    u = RatFun(_U)
    return power - 1, power * fun - u * fun + 2 * u * fun.derivative()


def apply_ladder(
    params: SuperPotentialParams, direction: LadderDirection, wave: QuasiPolyWave
) -> QuasiPolyWave:
    """Apply A+ or A- = (+/- d/dr + W) symbolically; result is canonical."""
    if direction not in ("plus", "minus"):
        raise ValueError(f"ladder direction must be 'plus' or 'minus', got {direction!r}")
    fun = wave.ratio()
    _, dfun = _ddr(wave.power, fun)
    wfun = _superpotential_fun(params) * fun  # r W(r) f(u) at power-1
    total = dfun + wfun if direction == "plus" else -dfun + wfun
    if total.is_zero:
        raise ValueError("ladder operator annihilated the wave")
    return canonical_wave(wave.scale, wave.power - 1, total.num, total.den)


def schrodinger_residual(
    params: SuperPotentialParams, wave: QuasiPolyWave, energy: Fraction, sector: Sector
) -> RatFun:
    """Exact residual -chi'' + (V - E) chi, divided by scale * r^(power-2) e^(-u/2).

    The zero rational function certifies an eigenpair; anything else is the
    exact defect.
    """
    u = RatFun(_U)
    fun = wave.ratio()
    p1, d1 = _ddr(wave.power, fun)
    _, d2 = _ddr(p1, d1)
    v = potential_fun(params, sector)
    return -d2 + u * (v - Fraction(energy)) * fun


# -- supersymmetry phase ------------------------------------------------------------


@dataclass(frozen=True)
class SusyPhase:
    value: Literal["broken", "unbroken"]
    origin_exponents: tuple[Fraction, Fraction]
    evidence: str


def classify_zero_modes(origin_coeff: Fraction, gaussian_sign: int) -> SusyPhase:
    """Classify SUSY from the superpotential's Laurent data.

    For W ~ sign * r at infinity and W ~ c/r at the origin the candidate zero
    modes behave as exp(-int W) ~ r^(-c) e^(-sign r^2/2) and exp(+int W) ~
    r^(+c) e^(+sign r^2/2); square-integrability at both ends is decidable
    from (c, sign) alone.
    """
    if gaussian_sign not in (-1, 1):
        raise ValueError("gaussian_sign must be +1 or -1")
    c = Fraction(origin_coeff)
    minus_ok = gaussian_sign > 0 and 2 * c < 1
    plus_ok = gaussian_sign < 0 and 2 * c > -1
    exponents = (-c, c)
    if minus_ok or plus_ok:
        mode = "exp(-int W)" if minus_ok else "exp(+int W)"
        return SusyPhase("unbroken", exponents, f"{mode} is square-integrable on (0, inf)")
    return SusyPhase(
        "broken",
        exponents,
        "exp(-int W) diverges at the origin (r^%s) and exp(+int W) grows like exp(+r^2/2)" % (-c,),
    )


def classify_susy(params: SuperPotentialParams) -> SusyPhase:
    """SUSY phase of the conditional family: broken for every alpha > 0."""
    return classify_zero_modes(params.alpha + 1, gaussian_sign=+1)


# -- potential catalogue -------------------------------------------------------------


@dataclass(frozen=True)
class PotentialSpec:
    """Named radial potential with its evaluator; defined for r > 0."""

    kind: str
    evaluate: Callable[[float], float]
    additive_constant: Fraction = Fraction(0)
    label: str = ""

    def __call__(self, r: float) -> float:
        if r <= 0:
            raise ValueError("potential evaluated at r <= 0")
        return self.evaluate(r)


def potential_spec(params: SuperPotentialParams, sector: Sector) -> PotentialSpec:
    _check_sector(sector)
    kind = "v_plus" if sector == "plus" else "v_minus"
    const = 2 * params.alpha + (7 if sector == "plus" else 5)
    return PotentialSpec(
        kind,
        lambda r: partner_potential(params, sector, r),
        additive_constant=const,
        label=f"{kind}(alpha={params.alpha})",
    )


# -- tabulation ----------------------------------------------------------------------


def tabulate_wave(wave: QuasiPolyWave, rs) -> list[tuple[float, float]]:
    return [(float(r), wave(float(r))) for r in rs]
