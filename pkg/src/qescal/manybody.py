"""N-body side of the workbench.

Reduces the inverse-square N-particle Hamiltonian with a radial confining
term to (exactly solved) angular polynomial sectors plus a 1D radial
problem: exact construction of the translationally invariant symmetric
homogeneous polynomials annihilated by the Calogero operator, the
quasi-solvable radial potential matching the extended oscillator, assembly
of full configuration-space eigenfunctions, and an N-dimensional
finite-difference residual harness for H psi = E psi.

Multivariate polynomials are sparse dicts mapping exponent tuples to exact
coefficients.  Coefficients are Fraction when the coupling square root
a = sqrt(1+2g)/2 is rational and elements of the real quadratic field
Q(sqrt(1+2g)) otherwise, so the null-space computation stays exact for
every admissible coupling.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .polys import RatPoly, laguerre
from .susy import PotentialSpec, QuasiPolyWave, chi_minus, make_params

Exponent = tuple[int, ...]


# -- exact coefficients: Q and Q(sqrt(d)) --------------------------------------


@dataclass(frozen=True)
class QuadExt:
    """Element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)), d > 0 non-square."""

    p: Fraction
    q: Fraction
    d: Fraction

    def _coerce(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mixing quadratic extensions with different radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.p * o.p + self.q * o.q * self.d, self.p * o.q + self.q * o.p, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.p * o.p - o.q * o.q * o.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        inv = QuadExt(o.p / norm, -o.q / norm, self.d)
        return self * inv

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            return self.d == other.d and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.d))

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(float(self.d))

    def __repr__(self) -> str:
        return f"({self.p} + {self.q}*sqrt({self.d}))"


Coef = Union[Fraction, QuadExt]


def _fraction_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        raise ValueError("square root of a negative rational")
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def coupling_root(g: Fraction) -> Coef:
    """a = sqrt(1 + 2g)/2, exact: Fraction when possible, else in Q(sqrt(1+2g))."""
    g = Fraction(g)
    if g < Fraction(-1, 2):
        raise ValueError(f"coupling must satisfy g >= -1/2, got {g}")
    s = 1 + 2 * g
    root = _fraction_sqrt(s)
    if root is not None:
        return root / 2
    return QuadExt(Fraction(0), Fraction(1, 2), s)


def reduction_constants(N: int, g: Fraction) -> tuple[Coef, Coef]:
    """The radial-reduction constants (a, b) for N particles at coupling g."""
    if N < 2:
        raise ValueError("need at least two particles")
    a = coupling_root(Fraction(g))
    b = Fraction(N * (N - 1), 2) * a + Fraction(N * (N + 1), 4) - 2
    return a, b


# -- sparse multivariate polynomials ----------------------------------------------

MPoly = dict  # Exponent -> Coef


def mp_zero() -> MPoly:
    return {}


def mp_const(n_vars: int, value: Coef) -> MPoly:
    if not value:
        return {}
    return {(0,) * n_vars: value}


def mp_add(a: MPoly, b: MPoly) -> MPoly:
    out = dict(a)
    for mono, c in b.items():
        s = out.get(mono, Fraction(0)) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return out


def mp_scale(a: MPoly, c: Coef) -> MPoly:
    if not c:
        return {}
    return {mono: coeff * c for mono, coeff in a.items()}


def mp_sub(a: MPoly, b: MPoly) -> MPoly:
    return mp_add(a, mp_scale(b, Fraction(-1)))


def mp_mul(a: MPoly, b: MPoly) -> MPoly:
    out: MPoly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(mono, Fraction(0)) + ca * cb
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def mp_diff(a: MPoly, var: int) -> MPoly:
    out: MPoly = {}
    for mono, c in a.items():
        e = mono[var]
        if e:
            new = list(mono)
            new[var] = e - 1
            out[tuple(new)] = c * e
    return out


def mp_eval(a: MPoly, point: Sequence) -> object:
    """Evaluate; exact for Fraction points, float for float points."""
    exact = all(isinstance(v, (int, Fraction)) for v in point)
    total = Fraction(0) if exact else 0.0
    for mono, c in a.items():
        term = c if exact else float(c)
        for e, v in zip(mono, point):
            if e:
                term = term * v**e
        total = total + term
    return total


def mp_degree(a: MPoly) -> int:
    return max((sum(m) for m in a), default=0)


def mp_is_symmetric(a: MPoly, n_vars: int) -> bool:
    """Invariance under all adjacent transpositions (they generate S_N)."""
    for i in range(n_vars - 1):
        for mono, c in a.items():
            swapped = list(mono)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if a.get(tuple(swapped), Fraction(0)) != c:
                return False
    return True


def mp_is_translation_invariant(a: MPoly, n_vars: int) -> bool:
    """Annihilation by sum_i d/dx_i, i.e. invariance under x_i -> x_i + c."""
    total: MPoly = {}
    for i in range(n_vars):
        total = mp_add(total, mp_diff(a, i))
    return not total


def centered_power_sum(N: int, j: int) -> MPoly:
    """p_j = sum_i (x_i - xbar)^j with xbar the coordinate mean."""
    out: MPoly = {}
    for i in range(N):
        base: MPoly = {}
        for m in range(N):
            mono = [0] * N
            mono[m] = 1
            base[tuple(mono)] = Fraction(-1, N) + (1 if m == i else 0)
        base = {k: v for k, v in base.items() if v}
        term = mp_const(N, Fraction(1))
        for _ in range(j):
            term = mp_mul(term, base)
        out = mp_add(out, term)
    return out


def _partitions(total: int, max_part: int, min_part: int = 2) -> Iterable[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for part in range(min(total, max_part), min_part - 1, -1):
        for rest in _partitions(total - part, part, min_part):
            yield (part,) + rest


def homogeneous_basis(N: int, k: int) -> list[MPoly]:
    """Basis of the degree-k translation-invariant symmetric polynomials.

    Products of centered power sums p_j, 2 <= j <= N, over the partitions of
    k into such parts; p_2 .. p_N generate the whole ring (p_1 vanishes
    identically), and an exact rank computation on the expanded coefficients
    confirms independence.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return [mp_const(N, Fraction(1))]
    if k == 1 or N < 2:
        return []
    sums = {j: centered_power_sum(N, j) for j in range(2, N + 1)}
    candidates = []
    for partition in _partitions(k, N):
        poly = mp_const(N, Fraction(1))
        for part in partition:
            poly = mp_mul(poly, sums[part])
        candidates.append(poly)
    return _independent_subset(candidates)


def _independent_subset(polys: list[MPoly]) -> list[MPoly]:
    """Keep a maximal linearly independent subset, by exact elimination."""
    kept: list[MPoly] = []
    reduced_rows: list[dict] = []
    for poly in polys:
        row = dict(poly)
        for prior in reduced_rows:
            lead = prior["lead"]
            if lead in row:
                factor = row[lead] / prior["row"][lead]
                for mono, c in prior["row"].items():
                    s = row.get(mono, Fraction(0)) - factor * c
                    if s:
                        row[mono] = s
                    else:
                        row.pop(mono, None)
        if row:
            lead = max(row)
            reduced_rows.append({"lead": lead, "row": row})
            kept.append(poly)
    return kept


# -- the Calogero operator and its kernel -------------------------------------------


def _divide_by_difference(poly: MPoly, i: int, j: int) -> MPoly:
    """Exact division by (x_i - x_j) via synthetic division in x_i at x_i = x_j.

    A nonzero remainder is an implementation bug (the dividends here are
    antisymmetric under i <-> j, hence divisible).
    """
    by_deg: dict[int, MPoly] = {}
    for mono, c in poly.items():
        d = mono[i]
        rest = list(mono)
        rest[i] = 0
        by_deg.setdefault(d, {})[tuple(rest)] = c
    if not by_deg:
        return {}
    top = max(by_deg)

    def times_xj(p: MPoly) -> MPoly:
        out = {}
        for mono, c in p.items():
            new = list(mono)
            new[j] += 1
            out[tuple(new)] = c
        return out

    quotient: MPoly = {}
    carry: MPoly = {}
    for d in range(top, 0, -1):
        s_d = mp_add(by_deg.get(d, {}), carry)
        for mono, c in s_d.items():
            new = list(mono)
            new[i] += d - 1
            if c:
                quotient[tuple(new)] = c
        carry = times_xj(s_d)
    remainder = mp_add(by_deg.get(0, {}), carry)
    if remainder:
        raise ArithmeticError("division by (x_i - x_j) left a remainder")
    return quotient


def calogero_operator_apply(P: MPoly, a: Coef, N: int) -> MPoly:
    """Apply sum_j d^2/dx_j^2 + (a + 1/2) sum_{j != k} (d_j - d_k)/(x_j - x_k).

    The pairwise terms are exact polynomial divisions; the result is
    homogeneous of degree deg(P) - 2 (or zero).
    """
    laplacian: MPoly = {}
    for idx in range(N):
        laplacian = mp_add(laplacian, mp_diff(mp_diff(P, idx), idx))
    pairwise: MPoly = {}
    for i in range(N):
        for j in range(i + 1, N):
            diff = mp_sub(mp_diff(P, i), mp_diff(P, j))
            if not diff:
                continue
            # ordered pairs (i,j) and (j,i) contribute equally
            pairwise = mp_add(pairwise, mp_scale(_divide_by_difference(diff, i, j), Fraction(2)))
    t = a + Fraction(1, 2)
    return mp_add(laplacian, mp_scale(pairwise, t))


def _nullspace(columns: list[MPoly]) -> list[list[Coef]]:
    """Exact null space of the linear map column_j -> its coefficient vector."""
    monomials = sorted({m for col in columns for m in col})
    rows = [[col.get(m, Fraction(0)) for col in columns] for m in monomials]
    ncols = len(columns)
    pivot_cols: list[int] = []
    reduced: list[list[Coef]] = []
    for row in rows:
        row = list(row)
        for prow, pcol in zip(reduced, pivot_cols):
            if row[pcol]:
                factor = row[pcol]
                row = [rc - factor * pc for rc, pc in zip(row, prow)]
        lead = next((c for c in range(ncols) if row[c]), None)
        if lead is None:
            continue
        pivot = row[lead]
        row = [c / pivot for c in row]
        for idx, (prow, pcol) in enumerate(zip(reduced, pivot_cols)):
            if prow[lead]:
                factor = prow[lead]
                reduced[idx] = [pc - factor * rc for pc, rc in zip(prow, row)]
        reduced.append(row)
        pivot_cols.append(lead)
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec: list[Coef] = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for prow, pcol in zip(reduced, pivot_cols):
            vec[pcol] = -prow[free]
        basis.append(vec)
    return basis


def solve_Pkq(N: int, k: int, a: Coef) -> list[MPoly]:
    """All degree-k invariant-sector polynomials annihilated by the operator.

    Returns an exact basis of the null space restricted to
    ``homogeneous_basis(N, k)``; its length is the sector dimension g(N, k).
    Whether solutions divisible by the squared radius should be excluded from
    the degeneracy count is a bookkeeping convention; this returns the raw
    kernel.
    """
    basis = homogeneous_basis(N, k)
    if not basis:
        return []
    images = [calogero_operator_apply(p, a, N) for p in basis]
    vectors = _nullspace(images)
    out = []
    for vec in vectors:
        poly: MPoly = {}
        for coeff, base in zip(vec, basis):
            if coeff:
                poly = mp_add(poly, mp_scale(base, coeff))
        check = calogero_operator_apply(poly, a, N)
        if check:
            raise ArithmeticError("null-space vector not annihilated: elimination bug")
        out.append(_normalize_mpoly(poly))
    return out


def _normalize_mpoly(poly: MPoly) -> MPoly:
    if not poly:
        return poly
    lead = max(poly)
    return mp_scale(poly, Fraction(1) / poly[lead])


# -- the many-body problem ------------------------------------------------------------


@dataclass(frozen=True)
class ManyBodySpec:
    """Static data of one reduced N-body sector."""

    N: int
    g: Fraction
    k: int
    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "g", Fraction(self.g))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.N < 2:
            raise ValueError("need at least two particles")
        if self.g < Fraction(-1, 2):
            raise ValueError("coupling must satisfy g >= -1/2")
        if self.k < 0:
            raise ValueError("polynomial degree k must be nonnegative")
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")

    @property
    def a(self) -> Coef:
        return coupling_root(self.g)

    @property
    def b(self) -> Coef:
        return reduction_constants(self.N, self.g)[1]

    @property
    def l(self) -> Coef:
        return self.k + self.b

    @property
    def g1(self) -> Fraction:
        return Fraction(2) / (2 * self.alpha + 3)


def radius(x: Sequence[float]) -> float:
    """Radial coordinate r = sqrt(sum_{i<j} (x_i - x_j)^2 / N)."""
    n = len(x)
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            d = x[i] - x[j]
            total += d * d
    return math.sqrt(total / n)


def radius_squared_exact(x: Sequence[Fraction]) -> Fraction:
    n = len(x)
    total = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n):
            d = Fraction(x[i]) - Fraction(x[j])
            total += d * d
    return total / n


def potential_U(spec: ManyBodySpec, kind: str = "extended") -> PotentialSpec:
    """The radial confining term U as a function of r.

    ``extended``: the quasi-solvable choice, fixed by l(l+1)/r^2 + U = V-(r);
    ``harmonic``: the exactly solvable baseline l(l+1)/r^2 + U = V+ - (2 alpha + 7),
    which collapses to U = r^2 when alpha = l.
    """
    if kind not in ("extended", "harmonic"):
        raise ValueError(f"unknown potential kind {kind!r}")
    alpha = float(spec.alpha)
    ll1 = float(spec.l * (spec.l + 1))
    if kind == "harmonic":
        coeff = alpha * (alpha + 1.0) - ll1

        def evaluate(r: float, coeff=coeff) -> float:
            return r * r + coeff / (r * r)

        return PotentialSpec("calogero_u", evaluate, label=f"harmonic U (alpha={spec.alpha})")

    g1 = float(spec.g1)
    coeff = (alpha + 1.0) * (alpha + 2.0) - ll1
    const = 2.0 * alpha + 5.0

    def evaluate(r: float, coeff=coeff, g1=g1, const=const) -> float:
        u = r * r
        q = 1.0 + g1 * u
        return u + coeff / u - 4.0 * g1 / q + 8.0 * g1 * g1 * u / (q * q) + const

    return PotentialSpec("calogero_u", evaluate, label=f"extended U (alpha={spec.alpha}, k={spec.k})")


def total_potential(spec: ManyBodySpec, x: Sequence[float], kind: str = "extended") -> float:
    """Full N-body potential: pairwise inverse squares plus the radial term."""
    u_spec = potential_U(spec, kind)
    g = float(spec.g)
    total = 0.0
    if g:
        for i in range(spec.N):
            for j in range(i + 1, spec.N):
                d = x[i] - x[j]
                total += g / (d * d)
    return total + u_spec(radius(x))


def manybody_energy(spec: ManyBodySpec, n: int, kind: str = "extended") -> Fraction:
    """Analytic level: 4(n + alpha + 5/2) for the extended potential; the
    harmonic baseline drops the additive constant 2 alpha + 7."""
    if n < 0:
        raise ValueError("level index must be nonnegative")
    if kind == "extended":
        return 4 * (n + spec.alpha + Fraction(5, 2))
    if kind == "harmonic":
        return 4 * n + 2 * spec.alpha + 3
    raise ValueError(f"unknown potential kind {kind!r}")


@dataclass(frozen=True)
class ManyBodyEigenfunction:
    """Callable eigenfunction on the ordered sector x_1 > x_2 > ... > x_N."""

    spec: ManyBodySpec
    n: int
    P: MPoly
    kind: str
    radial_scale: float
    radial_power: float
    radial_num: RatPoly
    radial_den: RatPoly

    def __call__(self, x: Sequence[float]) -> float:
        xs = list(x)
        if len(xs) != self.spec.N:
            raise ValueError(f"expected {self.spec.N} coordinates")
        for i in range(len(xs) - 1):
            if not xs[i] > xs[i + 1]:
                raise ValueError("point must lie strictly inside the ordered sector")
        r = radius(xs)
        u = r * r
        exponent = float(self.spec.a) + 0.5
        prod = 1.0
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                prod *= (xs[i] - xs[j]) ** exponent
        value = (
            self.radial_scale
            * r**self.radial_power
            * math.exp(-u / 2.0)
            * self.radial_num(u)
            / self.radial_den(u)
            * prod
        )
        return value * float(mp_eval(self.P, [float(c) for c in xs]))

    @property
    def energy(self) -> Fraction:
        return manybody_energy(self.spec, self.n, self.kind)

    @property
    def origin_exponent(self) -> float:
        """Power of r multiplying the regular part; reported, not asserted,
        since square-integrability over the full measure is not settled here."""
        return self.radial_power


def assemble_eigenfunction(
    spec: ManyBodySpec, n: int, P: MPoly, kind: str = "extended"
) -> ManyBodyEigenfunction:
    """Build psi(x) = r^(-(l+1)) * prod (x_i-x_j)^(a+1/2) * P(x) * chi(r)."""
    if n < 0:
        raise ValueError("level index must be nonnegative")
    if not P:
        raise ValueError("P must be a nonzero sector polynomial")
    if mp_degree(P) != spec.k:
        raise ValueError(f"P has degree {mp_degree(P)}, spec says k={spec.k}")
    if kind == "extended":
        wave: QuasiPolyWave = chi_minus(make_params(spec.alpha), n)
        power = float(wave.power) - float(spec.l) - 1.0
        return ManyBodyEigenfunction(spec, n, P, kind, wave.scale.value(), power, wave.num, wave.den)
    if kind == "harmonic":
        num = laguerre(n, spec.alpha + Fraction(1, 2))
        power = float(spec.alpha) + 1.0 - float(spec.l) - 1.0
        return ManyBodyEigenfunction(spec, n, P, kind, 1.0, power, num, RatPoly.one())
    raise ValueError(f"unknown potential kind {kind!r}")


# -- finite-difference residual harness -----------------------------------------------


@dataclass(frozen=True)
class ResidualReport:
    energy: float
    h: float
    max_rel_residual: float
    records: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {
            "energy": self.energy,
            "h": self.h,
            "max_rel_residual": self.max_rel_residual,
            "records": list(self.records),
        }


def _fd_laplacian(f: Callable[[Sequence[float]], float], x: list[float], h: float, center: float) -> float:
    total = 0.0
    for i in range(len(x)):
        shifted = list(x)
        shifted[i] = x[i] + h
        plus = f(shifted)
        shifted[i] = x[i] - h
        minus = f(shifted)
        total += plus + minus
    return (total - 2.0 * len(x) * center) / (h * h)


def residual_check(
    eigfn: ManyBodyEigenfunction,
    energy: Fraction | float,
    points: Sequence[Sequence[float]],
    h: float = 1e-3,
    psi_floor: float = 1e-12,
) -> ResidualReport:
    """Max over points of |(H psi)(x)/psi(x) - E| / |E|.

    Central second differences in every coordinate at steps h and h/2 with one
    Richardson pass.  Points must sit strictly inside the ordered sector with
    pairwise separations of at least 10 h (far from the inverse-square
    singularities) and |psi| above the underflow floor.
    """
    e_val = float(energy)
    if e_val == 0.0:
        raise ValueError("zero analytic energy")
    spec = eigfn.spec
    records = []
    worst = 0.0
    for point in points:
        x = [float(c) for c in point]
        gaps = [x[i] - x[i + 1] for i in range(len(x) - 1)]
        if any(gap <= 0 for gap in gaps):
            raise ValueError(f"point {x} is not strictly ordered")
        if min(gaps) < 10.0 * h:
            raise ValueError(f"point {x} violates the 10h separation requirement")
        psi = eigfn(x)
        if abs(psi) < psi_floor:
            raise ValueError(f"|psi| = {abs(psi):.3e} below the underflow floor at {x}")
        lap_h = _fd_laplacian(eigfn, x, h, psi)
        lap_h2 = _fd_laplacian(eigfn, x, h / 2.0, psi)
        lap = (4.0 * lap_h2 - lap_h) / 3.0
        h_psi = -lap + total_potential(spec, x, eigfn.kind) * psi
        ratio = h_psi / psi
        rel = abs(ratio - e_val) / abs(e_val)
        worst = max(worst, rel)
        records.append(
            {
                "point": x,
                "psi": psi,
                "H_psi_over_psi": ratio,
                "E": e_val,
                "rel_residual": rel,
            }
        )
    return ResidualReport(e_val, h, worst, tuple(records))


def sample_sector_points(
    N: int,
    count: int,
    seed: int = 0,
    min_separation: float = 0.2,
    spread: float = 1.5,
) -> list[list[float]]:
    """Deterministic sample of strictly ordered points with a separation floor."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        xs = sorted((rng.uniform(-spread, spread) for _ in range(N)), reverse=True)
        gaps = [xs[i] - xs[i + 1] for i in range(N - 1)]
        if gaps and min(gaps) < min_separation:
            continue
        points.append(xs)
    return points


# -- serialization ---------------------------------------------------------------------


def mpoly_to_json(poly: MPoly) -> dict:
    out = {}
    for mono, c in sorted(poly.items()):
        key = ",".join(str(e) for e in mono)
        if isinstance(c, QuadExt):
            out[key] = {"rational": str(c.p), "root_coeff": str(c.q), "radicand": str(c.d)}
        else:
            out[key] = str(c)
    return out


def mpoly_from_json(data: dict) -> MPoly:
    out: MPoly = {}
    for key, value in data.items():
        mono = tuple(int(p) for p in key.split(","))
        if isinstance(value, dict):
            out[mono] = QuadExt(
                Fraction(value["rational"]), Fraction(value["root_coeff"]), Fraction(value["radicand"])
            )
        else:
            out[mono] = Fraction(value)
    return out
