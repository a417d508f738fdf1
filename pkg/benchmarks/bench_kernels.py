"""Benchmark the compiled Sturm/bisection kernels against the pure-Python fallback.

Runs the production workload (lowest 6 eigenvalues of the discretized
minus-sector potential) at several grid sizes through both backends and
prints a timing table.  Usage:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from qescal._kernels import _fallback
from qescal.solver import discretize, radial_grid
from qescal.susy import make_params, potential_spec

try:
    from qescal._kernels import _speedups
except ImportError:
    _speedups = None


def time_backend(backend, diag, off, indices, repeats=3):
    best = float("inf")
    values = None
    for _ in range(repeats):
        start = time.perf_counter()
        values = backend.bisect_indices(diag, off, indices)
        best = min(best, time.perf_counter() - start)
    return best, values


def main() -> None:
    params = make_params(1)
    spec = potential_spec(params, "minus")
    indices = np.arange(6, dtype=np.int64)
    print(f"{'grid':>6}  {'cython':>10}  {'python':>10}  {'speedup':>8}  agreement")
    for n_points in (1000, 4000, 8000):
        grid = radial_grid(12.0, n_points)
        t = discretize(spec, grid)
        diag, off = np.asarray(t.diag), np.asarray(t.off)
        pure_time, pure_vals = time_backend(_fallback, diag, off, indices, repeats=1)
        if _speedups is None:
            print(f"{n_points:>6}  {'n/a':>10}  {pure_time:>9.3f}s  {'':>8}  (compiled kernels not built)")
            continue
        fast_time, fast_vals = time_backend(_speedups, diag, off, indices)
        agreement = float(np.max(np.abs(np.asarray(fast_vals) - np.asarray(pure_vals))))
        print(
            f"{n_points:>6}  {fast_time:>9.4f}s  {pure_time:>9.3f}s  "
            f"{pure_time / fast_time:>7.1f}x  max |delta| = {agreement:.2e}"
        )


if __name__ == "__main__":
    main()
