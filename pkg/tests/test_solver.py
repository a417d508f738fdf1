"""Finite-difference engine against analytic and library oracles."""

import math
from fractions import Fraction as F

import numpy as np
import pytest
import scipy.linalg

from qescal.solver import (
    GridSpec,
    QuadratureError,
    SolverError,
    Tridiag,
    discretize,
    eigenvector,
    integrate,
    lowest_eigenvalues,
    radial_grid,
    refined,
    richardson,
    richardson_pair,
    solve_spectrum,
    sturm_count,
)
from qescal.susy import analytic_energy, chi_minus, make_params, potential_spec


def test_grid_spec():
    grid = GridSpec(0.0, 4.0, 3)
    assert grid.h == 1.0
    assert list(grid.nodes()) == [1.0, 2.0, 3.0]
    with pytest.raises(ValueError):
        GridSpec(4.0, 1.0, 10)
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, 2)
    rg = radial_grid(12.0, 4000)
    assert rg.r_min == pytest.approx(rg.h, rel=1e-14)
    fine = refined(rg)
    assert fine.h == pytest.approx(rg.h / 2, rel=1e-15)
    assert fine.r_min == fine.h


def test_discretize_free_particle():
    t = discretize(lambda r: 0.0, GridSpec(0.0, 4.0, 3))
    assert np.allclose(t.diag, [2.0, 2.0, 2.0])
    assert np.allclose(t.off, [-1.0, -1.0])


def test_discretize_picks_up_potential_value():
    # grid nodes at 1, 2, 3: the alpha=1 oscillator-sector value V+(1) = 12
    params = make_params(1)
    t = discretize(potential_spec(params, "plus"), GridSpec(0.0, 4.0, 3))
    assert t.diag[0] == pytest.approx(2.0 + 12.0, rel=1e-15)


def test_discretize_rejects_nonfinite():
    with pytest.raises(ValueError):
        discretize(lambda r: float("inf") if r < 2 else 0.0, GridSpec(0.0, 4.0, 3))


def test_two_by_two_and_scalar():
    assert lowest_eigenvalues(Tridiag([2.0, 2.0], [-1.0]), 2) == pytest.approx([1.0, 3.0])
    assert lowest_eigenvalues(Tridiag([5.0], []), 1) == pytest.approx([5.0])
    with pytest.raises(ValueError):
        lowest_eigenvalues(Tridiag([5.0], []), 2)


def test_box_spectrum():
    t = discretize(lambda r: 0.0, GridSpec(0.0, math.pi, 2000))
    values = lowest_eigenvalues(t, 3)
    for n, value in enumerate(values, start=1):
        assert abs(value - n * n) / (n * n) < 1e-3


def test_against_lapack_oracle():
    params = make_params(1)
    t = discretize(potential_spec(params, "minus"), radial_grid(12.0, 800))
    mine = lowest_eigenvalues(t, 6)
    theirs = scipy.linalg.eigh_tridiagonal(
        np.asarray(t.diag), np.asarray(t.off), select="i", select_range=(0, 5), eigvals_only=True
    )
    assert np.allclose(mine, theirs, rtol=1e-10, atol=1e-9)


def test_eigenvector_two_by_two():
    v = eigenvector(Tridiag([2.0, 2.0], [-1.0]), 1.0)
    assert np.allclose(np.abs(v), [1 / math.sqrt(2)] * 2, rtol=1e-10)


def test_eigenvector_box_ground_state():
    grid = GridSpec(0.0, math.pi, 501)
    t = discretize(lambda r: 0.0, grid)
    lam = lowest_eigenvalues(t, 1)[0]
    v = eigenvector(t, lam)
    mid = np.argmax(np.abs(v))
    assert abs(int(mid) - 250) <= 1
    residual = np.linalg.norm(t.matvec(v) - lam * v)
    assert residual <= 1e-8 * t.norm_inf()


def test_eigenvector_tracks_analytic_wave():
    params = make_params(1)
    grid = radial_grid(12.0, 2000)
    t = discretize(potential_spec(params, "minus"), grid)
    lam = lowest_eigenvalues(t, 1)[0]
    v = eigenvector(t, lam)
    wave = chi_minus(params, 0)
    analytic = np.array([wave(float(r)) for r in grid.nodes()])
    cosine = float(np.dot(v, analytic) / (np.linalg.norm(v) * np.linalg.norm(analytic)))
    assert abs(cosine) >= 1 - 1e-6


def test_eigenvector_rejects_bad_shift():
    t = discretize(lambda r: 0.0, GridSpec(0.0, math.pi, 200))
    with pytest.raises(SolverError):
        eigenvector(t, 2.5, max_iters=3)  # between eigenvalues 1 and 4


def test_richardson():
    assert richardson(10.04, 10.01) == pytest.approx(10.0, abs=1e-12)
    grid = GridSpec(0.0, math.pi, 500)
    fine = refined(grid)
    e1 = lowest_eigenvalues(discretize(lambda r: 0.0, grid), 1)[0]
    e2 = lowest_eigenvalues(discretize(lambda r: 0.0, fine), 1)[0]
    assert richardson(e1, e2) == pytest.approx(1.0, abs=1e-6)
    assert richardson_pair(e1, grid.h, e2, fine.h) == pytest.approx(1.0, abs=1e-6)


def test_vminus_ground_state_extrapolates_to_14():
    params = make_params(1)
    report = solve_spectrum(
        potential_spec(params, "minus"),
        [analytic_energy(params, "minus", 0)],
        radial_grid(12.0, 2000),
    )
    assert report.rel_errors[0] <= 1e-6
    assert report.extrapolated[0] == pytest.approx(14.0, rel=1e-6)


def test_integrate_basics():
    assert integrate(lambda x: x, 0.0, 1.0, tol=1e-12) == pytest.approx(0.5, abs=1e-14)
    gauss = integrate(lambda r: math.exp(-r * r), 0.0, 12.0, tol=1e-13)
    assert gauss == pytest.approx(math.sqrt(math.pi) / 2, abs=1e-12)
    assert integrate(lambda x: x, 2.0, 2.0) == 0.0


def test_integrate_depth_cap():
    with pytest.raises(QuadratureError):
        integrate(lambda x: 1.0 / x, 0.0, 1.0, tol=1e-10)


@pytest.mark.parametrize("sector", ["plus", "minus"])
def test_convergence_order(sector):
    # eigenvalue error vs h must fit slope 2 on a log-log regression
    params = make_params(1)
    spec = potential_spec(params, sector)
    exact = float(analytic_energy(params, sector, 0))
    hs, errors = [], []
    for n_points in (2000, 4000, 8000, 16000):  # asymptotic regime for both sectors
        grid = radial_grid(12.0, n_points)
        value = lowest_eigenvalues(discretize(spec, grid), 1)[0]
        hs.append(grid.h)
        errors.append(abs(value - exact))
    slope = np.polyfit(np.log(hs), np.log(errors), 1)[0]
    assert abs(slope - 2.0) <= 0.1


def test_sturm_count_locates_levels():
    params = make_params(1)
    t = discretize(potential_spec(params, "minus"), radial_grid(12.0, 2000))
    for n in range(5):
        level = float(analytic_energy(params, "minus", n))
        assert sturm_count(t, level + 2.0) == n + 1


def test_truncation_insensitivity():
    # same step, two truncation radii: bound-state tails make the difference tiny
    params = make_params(1)
    spec = potential_spec(params, "minus")
    h = 10.0 / 2000.0
    analytic = [analytic_energy(params, "minus", n) for n in range(5)]

    def extrapolated(r_max):
        n_pts = round(r_max / h) - 2
        report = solve_spectrum(spec, analytic, GridSpec(h, r_max, n_pts))
        return report.extrapolated

    a = extrapolated(10.0)
    b = extrapolated(14.0)
    for x, y in zip(a, b):
        assert abs(x - y) / abs(y) < 1e-8


def test_determinism_and_workers():
    params = make_params(1)
    t = discretize(potential_spec(params, "minus"), radial_grid(12.0, 1500))
    first = lowest_eigenvalues(t, 6)
    second = lowest_eigenvalues(t, 6)
    assert first == second  # bit-identical
    parallel = lowest_eigenvalues(t, 6, workers=3)
    assert parallel == first


def test_report_shape_and_json():
    params = make_params(1)
    analytic = [analytic_energy(params, "minus", n) for n in range(3)]
    report = solve_spectrum(potential_spec(params, "minus"), analytic, radial_grid(10.0, 600))
    assert len(report.numeric) == len(report.analytic) == len(report.rel_errors) == 3
    for num, ana, rel in zip(report.extrapolated, report.analytic, report.rel_errors):
        assert rel == abs(num - float(ana)) / abs(float(ana))
    data = report.to_json_dict()
    assert data["analytic"] == ["14", "18", "22"]
    assert data["grid"]["n_points"] == 600


def test_tridiag_immutability():
    t = Tridiag([2.0, 2.0], [-1.0])
    with pytest.raises(ValueError):
        t.diag[0] = 5.0
