"""Command-line front end.

Subcommands:

* ``spectrum`` — analytic vs finite-difference spectra of both partner potentials;
* ``verify``   — the full invariant battery (factorization, exceptional-form
  identity, ladder pipeline, symbolic residual, orthonormality, SUSY phase,
  PCT comparison, ground-state simplification);
* ``pkq``      — exact bases of the invariant polynomial sectors;
* ``manybody`` — N-body finite-difference residual check of H psi = E psi;
* ``dump``     — plot-ready CSV tables of potentials and wavefunctions.

Exit codes: 0 success, 1 verification failure, 2 invalid input.  All reports
embed the fully resolved configuration and are deterministic for a given one.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from . import manybody as mb
from . import pct, solver, susy
from .polys import RatFun, RatPoly, exceptional_laguerre, laguerre

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2

_DEFAULTS: dict[str, str] = {
    "alpha": "1",
    "N": "3",
    "g": "0",
    "k": "0",
    "n": "0",
    "n_max": "5",
    "q": "1",
    "r_max": "12",
    "grid_points": "4000",
    "points": "20",
    "seed": "0",
    "workers": "1",
    "tol": "1e-5",
    "out": ".",
    "format": "json",
}


class ConfigError(Exception):
    pass


def _fraction(text: str, name: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse {name}={text!r} as a rational number") from exc


def _integer(text: str, name: str) -> int:
    try:
        return int(str(text))
    except ValueError as exc:
        raise ConfigError(f"cannot parse {name}={text!r} as an integer") from exc


def _real(text: str, name: str) -> float:
    try:
        return float(str(text))
    except ValueError as exc:
        raise ConfigError(f"cannot parse {name}={text!r} as a number") from exc


def _load_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved, validated run parameters (embedded in every report)."""

    alpha: Fraction
    N: int
    g: Fraction
    k: int
    n: int
    n_max: int
    q: int
    r_max: float
    grid_points: int
    points: int
    seed: int
    workers: int
    tol: float
    out: Path
    format: str
    detune_g1: Fraction | None = None
    baseline: bool = False

    def __post_init__(self) -> None:
        if self.alpha <= 0:
            raise ConfigError(f"alpha must be positive, got {self.alpha}")
        if self.N < 2:
            raise ConfigError(f"N must be at least 2, got {self.N}")
        if self.g < Fraction(-1, 2):
            raise ConfigError(f"g must be >= -1/2, got {self.g}")
        if self.k < 0:
            raise ConfigError(f"k must be nonnegative, got {self.k}")
        if self.n < 0 or self.n_max < 0:
            raise ConfigError("level indices must be nonnegative")
        if self.q < 1:
            raise ConfigError("q is a 1-based sector index")
        if self.r_max <= 0:
            raise ConfigError("r_max must be positive")
        if self.grid_points < 3:
            raise ConfigError("grid_points must be at least 3")
        if self.points < 1:
            raise ConfigError("points must be positive")
        if self.workers < 1:
            raise ConfigError("workers must be positive")
        if self.format not in ("json", "csv"):
            raise ConfigError(f"format must be json or csv, got {self.format}")
        if self.detune_g1 is not None and self.detune_g1 <= 0:
            raise ConfigError("detune factor must be positive")

    def as_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "N": self.N,
            "g": str(self.g),
            "k": self.k,
            "n": self.n,
            "n_max": self.n_max,
            "q": self.q,
            "r_max": self.r_max,
            "grid_points": self.grid_points,
            "points": self.points,
            "seed": self.seed,
            "workers": self.workers,
            "tol": self.tol,
            "out": str(self.out),
            "format": self.format,
            "detune_g1": None if self.detune_g1 is None else str(self.detune_g1),
            "baseline": self.baseline,
        }


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    file_values = _load_config_file(args.config) if getattr(args, "config", None) else {}

    def pick(key: str) -> str:
        flag = getattr(args, key, None)
        if flag is not None:
            return str(flag)
        if key in file_values:
            return file_values[key]
        return _DEFAULTS[key]

    detune = getattr(args, "detune_g1", None)
    if detune is None and "detune_g1" in file_values:
        detune = file_values["detune_g1"]
    return RunConfig(
        alpha=_fraction(pick("alpha"), "alpha"),
        N=_integer(pick("N"), "N"),
        g=_fraction(pick("g"), "g"),
        k=_integer(pick("k"), "k"),
        n=_integer(pick("n"), "n"),
        n_max=_integer(pick("n_max"), "n-max"),
        q=_integer(pick("q"), "q"),
        r_max=_real(pick("r_max"), "r-max"),
        grid_points=_integer(pick("grid_points"), "grid-points"),
        points=_integer(pick("points"), "points"),
        seed=_integer(pick("seed"), "seed"),
        workers=_integer(pick("workers"), "workers"),
        tol=_real(pick("tol"), "tol"),
        out=Path(pick("out")),
        format=pick("format"),
        detune_g1=None if detune is None else _fraction(detune, "detune-g1"),
        baseline=bool(getattr(args, "baseline", False)),
    )


def _params(config: RunConfig) -> susy.SuperPotentialParams:
    if config.detune_g1 is None:
        return susy.make_params(config.alpha)
    return susy.make_detuned_params(config.alpha, config.detune_g1)


def _write_json(config: RunConfig, name: str, payload: dict) -> Path:
    config.out.mkdir(parents=True, exist_ok=True)
    path = config.out / name
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")
    return path


def _write_csv(
    config: RunConfig, name: str, header: Sequence[str], rows: Sequence[Sequence[float]]
) -> Path:
    config.out.mkdir(parents=True, exist_ok=True)
    path = config.out / name
    lines = ["# " + ",".join(header)]
    for row in rows:
        lines.append(",".join(repr(float(v)) for v in row))
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path}")
    return path


# -- spectrum -------------------------------------------------------------------


def cmd_spectrum(config: RunConfig) -> int:
    params = _params(config)
    analytic = [susy.analytic_energy(params, "minus", n) for n in range(config.n_max + 1)]
    grid = solver.radial_grid(config.r_max, config.grid_points)
    payload: dict = {"config": config.as_dict(), "kernel_backend": solver.KERNEL_BACKEND}
    rows = []
    for sector in ("plus", "minus"):
        spec = susy.potential_spec(params, sector)
        report = solver.solve_spectrum(spec, analytic, grid, workers=config.workers)
        payload[f"v_{sector}"] = report.to_json_dict()
        for n, (ana, ext, rel) in enumerate(
            zip(report.analytic, report.extrapolated, report.rel_errors)
        ):
            rows.append((n, 0 if sector == "plus" else 1, float(ana), ext, rel))
    _write_json(config, "spectrum.json", payload)
    if config.format == "csv":
        _write_csv(
            config,
            "spectrum.csv",
            ["n", "sector_minus", "analytic", "extrapolated", "rel_error"],
            rows,
        )
        _write_csv(
            config,
            "wave_comparison.csv",
            ["r", "v_minus", "psi_numeric", "psi_analytic"],
            _wave_comparison_rows(params, grid),
        )
    worst = max(max(payload["v_plus"]["rel_errors"]), max(payload["v_minus"]["rel_errors"]))
    print(f"max relative eigenvalue error: {worst:.3e}")
    return EXIT_OK


def _wave_comparison_rows(params: susy.SuperPotentialParams, grid: solver.GridSpec) -> list:
    """Ground-state table (r, V(r), unit-norm numeric psi, unit-norm analytic psi)."""
    spec = susy.potential_spec(params, "minus")
    t = solver.discretize(spec, grid)
    lam = solver.lowest_eigenvalues(t, 1)[0]
    numeric = solver.eigenvector(t, lam)
    wave = _wave_for(params, 0)
    nodes = grid.nodes()
    analytic = np.array([wave(float(r)) for r in nodes])
    analytic /= np.linalg.norm(analytic)
    if float(np.dot(analytic, numeric)) < 0:
        analytic = -analytic
    return [
        (float(r), spec(float(r)), float(numeric[i]), float(analytic[i]))
        for i, r in enumerate(nodes)
    ]


# -- verify ---------------------------------------------------------------------


def _wave_for(params: susy.SuperPotentialParams, n: int) -> susy.QuasiPolyWave:
    # the combination (ladder) form exists for any g1; it equals the
    # exceptional form exactly when g1 is tuned
    if params.is_solvable:
        return susy.chi_minus(params, n)
    return susy.chi_minus_combination_form(params, n)


def _is_constant_multiple(a: RatFun, b: RatFun) -> bool:
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    ratio = a / b
    return ratio.num.degree == 0 and ratio.den.degree == 0


def _check_factorization(params, rng, records) -> None:
    worst = 0.0
    for _ in range(50):
        r = rng.uniform(0.1, 10.0)
        for sector in ("plus", "minus"):
            closed = susy.partner_potential(params, sector, r)
            fact = susy.factorized_potential(params, sector, r)
            worst = max(worst, abs(closed - fact) / (1.0 + abs(closed)))
    records.append(
        {
            "name": "factorization_w2_pm_wprime",
            "passed": worst <= 1e-11,
            "details": {"max_rel_deviation": worst},
        }
    )


def _check_exceptional_identity(params, n_max, records) -> None:
    alpha = params.alpha
    mismatched = []
    for n in range(n_max + 1):
        comb = susy.chi_minus_combination_form(params, n)
        expected = RatFun(
            exceptional_laguerre(n + 1, 1, alpha + Fraction(3, 2)),
            laguerre(1, alpha + Fraction(1, 2)).scale_arg(-1),
        )
        if not (comb.power == alpha + 2 and _is_constant_multiple(comb.ratio(), expected)):
            mismatched.append(n)
    records.append(
        {
            "name": "exceptional_form_identity",
            "passed": not mismatched,
            "details": {"levels_checked": n_max + 1, "mismatched_levels": mismatched},
        }
    )


def _check_ladder(params, n_max, records) -> None:
    failed = []
    for n in range(n_max + 1):
        plus_wave = susy.chi_plus(params, n)
        energy = susy.analytic_energy(params, "plus", n)
        try:
            lowered = susy.apply_ladder(params, "minus", plus_wave)
            target = _wave_for(params, n)
            ok = lowered.same_shape(target) and lowered.scale.ratio_squared(target.scale) == energy
            raised = susy.apply_ladder(params, "plus", lowered)
            ok = (
                ok
                and raised.same_shape(plus_wave)
                and raised.scale.ratio_squared(plus_wave.scale) == energy**2
            )
        except ValueError:
            ok = False
        if not ok:
            failed.append(n)
    records.append(
        {
            "name": "ladder_pipeline",
            "passed": not failed,
            "details": {"levels_checked": n_max + 1, "failed_levels": failed},
        }
    )


def _check_residual(params, n_max, records) -> None:
    nonzero = []
    for n in range(n_max + 1):
        wave = _wave_for(params, n)
        energy = susy.analytic_energy(params, "minus", n)
        if not susy.schrodinger_residual(params, wave, energy, "minus").is_zero:
            nonzero.append(n)
    records.append(
        {
            "name": "schrodinger_residual_symbolic",
            "passed": not nonzero,
            "details": {"levels_checked": n_max + 1, "nonzero_levels": nonzero},
        }
    )


def _check_orthonormality(params, n_max, records) -> None:
    levels = min(n_max, 5)
    waves = [_wave_for(params, n) for n in range(levels + 1)]
    worst_off = 0.0
    norms = []
    for i, wi in enumerate(waves):
        for j in range(i, len(waves)):
            wj = waves[j]
            value = solver.integrate(lambda r: wi(r) * wj(r), 0.0, 12.0, tol=1e-10)
            if i == j:
                norms.append(value)
            else:
                worst_off = max(worst_off, abs(value))
    records.append(
        {
            "name": "orthonormality",
            "passed": worst_off <= 1e-8,
            "details": {"measured_norms": norms, "max_off_diagonal": worst_off},
        }
    )


def _check_phase(params, records) -> None:
    phase = susy.classify_susy(params)
    records.append(
        {
            "name": "susy_phase",
            "passed": phase.value == "broken",
            "details": {
                "value": phase.value,
                "origin_exponents": [str(e) for e in phase.origin_exponents],
                "evidence": phase.evidence,
            },
        }
    )


def _check_pct(params, records) -> None:
    rs = [0.1 + 0.05 * i for i in range(200)]
    data = pct.comparison_report(params, rs)
    shift_ok = abs(data["constant"] - data["expected_constant"]) <= 1e-9
    records.append(
        {
            "name": "pct_vminus_comparison",
            "passed": data["max_deviation"] <= 1e-11 and shift_ok,
            "details": data,
        }
    )


def _check_ground_state(params, records) -> None:
    alpha = params.alpha
    left = RatFun(
        exceptional_laguerre(1, 1, alpha + Fraction(3, 2)),
        laguerre(1, alpha + Fraction(1, 2)).scale_arg(-1),
    )
    right = RatFun(
        RatPoly((alpha + Fraction(5, 2), 1)), RatPoly((alpha + Fraction(3, 2), 1))
    )
    records.append(
        {
            "name": "ground_state_simplification",
            "passed": left == right,
            "details": {"identity": "Lhat_{1,1}/(u+alpha+3/2) == (u+alpha+5/2)/(u+alpha+3/2)"},
        }
    )


def run_verification_battery(
    params: susy.SuperPotentialParams, n_max: int, seed: int = 0
) -> list[dict]:
    """Run every invariant check; each record is {name, passed, details}."""
    rng = random.Random(seed)
    records: list[dict] = []
    _check_factorization(params, rng, records)
    _check_exceptional_identity(params, n_max, records)
    _check_ladder(params, min(n_max, 8), records)
    _check_residual(params, min(n_max, 8), records)
    _check_orthonormality(params, n_max, records)
    _check_phase(params, records)
    _check_pct(params, records)
    _check_ground_state(params, records)
    return records


def cmd_verify(config: RunConfig) -> int:
    params = _params(config)
    records = run_verification_battery(params, config.n_max, config.seed)
    payload = {
        "config": config.as_dict(),
        "g1": str(params.g1),
        "checks": records,
        "all_passed": all(rec["passed"] for rec in records),
    }
    _write_json(config, "verify.json", payload)
    for rec in records:
        status = "PASS" if rec["passed"] else "FAIL"
        print(f"[{status}] {rec['name']}")
    if not payload["all_passed"]:
        failing = [rec["name"] for rec in records if not rec["passed"]]
        print(f"failing checks: {', '.join(failing)}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


# -- pkq ------------------------------------------------------------------------


def cmd_pkq(config: RunConfig) -> int:
    a = mb.coupling_root(config.g)
    polys = mb.solve_Pkq(config.N, config.k, a)
    payload = {
        "config": config.as_dict(),
        "dimension": len(polys),
        "basis": [mb.mpoly_to_json(p) for p in polys],
        "note": "raw kernel dimension; no quotient by radius-squared multiples",
    }
    _write_json(config, f"pkq_N{config.N}_k{config.k}.json", payload)
    print(f"g(N={config.N}, k={config.k}) = {len(polys)}")
    return EXIT_OK


# -- manybody --------------------------------------------------------------------


def cmd_manybody(config: RunConfig) -> int:
    if config.N > 4:
        raise ConfigError(
            f"N={config.N} rejected: the residual stencil costs grow as grid points x dimensions; N <= 4 enforced"
        )
    spec = mb.ManyBodySpec(config.N, config.g, config.k, config.alpha)
    sector_polys = mb.solve_Pkq(config.N, config.k, spec.a)
    if not sector_polys:
        raise ConfigError(f"no invariant sector polynomial exists for N={config.N}, k={config.k}")
    if config.q > len(sector_polys):
        raise ConfigError(f"q={config.q} out of range, sector dimension is {len(sector_polys)}")
    kind = "harmonic" if config.baseline else "extended"
    eigfn = mb.assemble_eigenfunction(spec, config.n, sector_polys[config.q - 1], kind)
    energy = mb.manybody_energy(spec, config.n, kind)
    points = mb.sample_sector_points(config.N, config.points, seed=config.seed)
    report = mb.residual_check(eigfn, energy, points)
    payload = {
        "config": config.as_dict(),
        "kind": kind,
        "energy": str(energy),
        "sector_dimension": len(sector_polys),
        "origin_exponent": eigfn.origin_exponent,
        "report": report.to_json_dict(),
    }
    _write_json(config, "manybody.json", payload)
    print(f"E = {float(energy)}, max relative residual = {report.max_rel_residual:.3e}")
    if report.max_rel_residual > config.tol:
        print(f"residual exceeds tolerance {config.tol}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


# -- dump -----------------------------------------------------------------------


def cmd_dump(config: RunConfig) -> int:
    params = _params(config)
    pct_spec = pct.PCTSpec.matching(params)
    n_points = config.grid_points
    rs = [config.r_max * (i + 1) / n_points for i in range(n_points)]
    potential_rows = [
        (
            r,
            susy.partner_potential(params, "plus", r),
            susy.partner_potential(params, "minus", r),
            pct.v1_potential(pct_spec, r),
        )
        for r in rs
    ]
    _write_csv(config, "potentials.csv", ["r", "v_plus", "v_minus", "v1_pct"], potential_rows)
    plus_wave = susy.chi_plus(params, config.n)
    minus_wave = _wave_for(params, config.n)
    wave_rows = [(r, plus_wave(r), minus_wave(r)) for r in rs]
    _write_csv(
        config, "waves.csv", ["r", f"chi_plus_{config.n}", f"chi_minus_{config.n}"], wave_rows
    )
    _write_json(
        config,
        "waves_exact.json",
        {
            "config": config.as_dict(),
            "chi_plus": susy.wave_to_json(plus_wave),
            "chi_minus": susy.wave_to_json(minus_wave),
        },
    )
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", help="superpotential parameter alpha > 0 (rational, e.g. 1/2)")
    sub.add_argument("--N", help="particle count")
    sub.add_argument("--g", help="inverse-square coupling, g >= -1/2 (rational)")
    sub.add_argument("--k", help="sector polynomial degree")
    sub.add_argument("--n", help="level index")
    sub.add_argument("--n-max", dest="n_max", help="highest level index")
    sub.add_argument("--q", help="1-based index into the sector basis")
    sub.add_argument("--r-max", dest="r_max", help="radial truncation")
    sub.add_argument("--grid-points", dest="grid_points", help="interior grid points")
    sub.add_argument("--points", help="number of residual sample points")
    sub.add_argument("--seed", help="seed for deterministic sampling")
    sub.add_argument("--workers", help="parallel eigenvalue workers")
    sub.add_argument("--tol", help="residual tolerance gate")
    sub.add_argument("--out", help="output directory")
    sub.add_argument("--format", help="report format: json or csv")
    sub.add_argument("--config", help="key=value config file (flags win)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qescal",
        description="Verification workbench for the QES extension of the rational Calogero model",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spectrum = sub.add_parser("spectrum", help="analytic vs numeric partner spectra")
    _add_common(p_spectrum)
    p_spectrum.set_defaults(func=cmd_spectrum)

    p_verify = sub.add_parser("verify", help="run the invariant battery")
    _add_common(p_verify)
    p_verify.add_argument(
        "--detune-g1",
        dest="detune_g1",
        help="test hook: multiply g1 by this factor to break solvability",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_pkq = sub.add_parser("pkq", help="invariant polynomial sector basis")
    _add_common(p_pkq)
    p_pkq.set_defaults(func=cmd_pkq)

    p_many = sub.add_parser("manybody", help="N-body residual check")
    _add_common(p_many)
    p_many.add_argument(
        "--baseline",
        action="store_true",
        help="use the exactly solvable harmonic baseline instead of the extended potential",
    )
    p_many.set_defaults(func=cmd_manybody)

    p_dump = sub.add_parser("dump", help="CSV tables of potentials and wavefunctions")
    _add_common(p_dump)
    p_dump.set_defaults(func=cmd_dump)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        config = _resolve_config(args)
        return args.func(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
