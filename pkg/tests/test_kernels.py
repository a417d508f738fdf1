"""Parity between the compiled kernels and the pure-Python fallback."""

import os
import subprocess
import sys

import numpy as np
import pytest

from qescal._kernels import _fallback

try:
    from qescal._kernels import _speedups
except ImportError:
    _speedups = None

needs_compiled = pytest.mark.skipif(_speedups is None, reason="compiled kernels not built")


def _random_problem(rng, n):
    diag = rng.uniform(-5.0, 50.0, size=n)
    off = rng.uniform(-8.0, 8.0, size=n - 1)
    return diag, off


@needs_compiled
def test_count_parity():
    rng = np.random.default_rng(3)
    for n in (2, 7, 120):
        diag, off = _random_problem(rng, n)
        for lam in np.linspace(-20.0, 80.0, 37):
            assert _speedups.count_below(diag, off, lam) == _fallback.count_below(diag, off, lam)


@needs_compiled
def test_count_is_monotone_and_exhaustive():
    rng = np.random.default_rng(4)
    diag, off = _random_problem(rng, 40)
    lo = float(np.min(diag) - 2 * np.max(np.abs(off)) - 1)
    hi = float(np.max(diag) + 2 * np.max(np.abs(off)) + 1)
    assert _speedups.count_below(diag, off, lo) == 0
    assert _speedups.count_below(diag, off, hi) == 40


@needs_compiled
def test_bisect_parity():
    rng = np.random.default_rng(5)
    for n in (5, 40, 300):
        diag, off = _random_problem(rng, n)
        idx = np.arange(min(n, 6), dtype=np.int64)
        fast = _speedups.bisect_indices(diag, off, idx)
        pure = _fallback.bisect_indices(diag, off, idx)
        scale = np.maximum(1.0, np.abs(fast))
        assert np.all(np.abs(fast - pure) <= 1e-9 * scale)
        # both must match a dense eigensolver
        dense = np.linalg.eigvalsh(np.diag(diag) + np.diag(off, 1) + np.diag(off, -1))
        assert np.allclose(fast, dense[: len(idx)], rtol=1e-10, atol=1e-9)


@needs_compiled
def test_solve_shifted_parity():
    rng = np.random.default_rng(6)
    diag, off = _random_problem(rng, 50)
    rhs = rng.uniform(-1.0, 1.0, size=50)
    lam = 0.37
    fast = _speedups.solve_shifted(diag, off, lam, rhs)
    pure = _fallback.solve_shifted(diag, off, lam, rhs)
    assert np.allclose(fast, pure, rtol=1e-12, atol=1e-12)
    # residual check against the direct matrix product
    mat = np.diag(diag - lam) + np.diag(off, 1) + np.diag(off, -1)
    assert np.allclose(mat @ fast, rhs, rtol=1e-9, atol=1e-9)


def test_fallback_solve_is_a_real_solve():
    rng = np.random.default_rng(7)
    diag, off = _random_problem(rng, 30)
    rhs = rng.uniform(-1.0, 1.0, size=30)
    x = _fallback.solve_shifted(diag, off, 0.0, rhs)
    mat = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    assert np.allclose(mat @ x, rhs, rtol=1e-9, atol=1e-9)


@needs_compiled
def test_default_backend_is_compiled():
    from qescal import _kernels

    assert _kernels.BACKEND_NAME == "cython"


def test_env_var_forces_pure_backend():
    code = "import qescal._kernels as k; print(k.BACKEND_NAME)"
    env = dict(os.environ, QESCAL_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"


def test_pure_backend_passes_acceptance_grade_problem():
    # the fallback must solve the production problem, just more slowly
    from qescal.solver import discretize, radial_grid
    from qescal.susy import analytic_energy, make_params, potential_spec

    params = make_params(1)
    t = discretize(potential_spec(params, "minus"), radial_grid(12.0, 900))
    diag, off = np.asarray(t.diag), np.asarray(t.off)
    values = _fallback.bisect_indices(diag, off, np.arange(3, dtype=np.int64))
    for n, value in enumerate(values):
        exact = float(analytic_energy(params, "minus", n))
        assert abs(value - exact) / exact < 5e-4  # raw O(h^2) accuracy
