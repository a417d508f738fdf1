# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Sturm counts, eigenvalue bisection, shifted tridiagonal solves.

Same interface and floating-point operation order as ``_fallback``; the
Sturm recurrence and the bisection loops run with the GIL released so
per-eigenvalue workers can overlap.
"""

from libc.math cimport fabs

import numpy as np

BACKEND_NAME = "cython"

cdef double _TINY = 2.2250738585072014e-308  # smallest normal double
cdef int _MAX_BISECT_ITERS = 256


cdef double _pivmin(const double[::1] off) noexcept nogil:
    cdef double m = 1.0
    cdef Py_ssize_t i
    for i in range(off.shape[0]):
        if off[i] * off[i] > m:
            m = off[i] * off[i]
    return m * _TINY


cdef int _count_below(const double[::1] diag, const double[::1] off,
                      double lam, double pivmin) noexcept nogil:
    cdef Py_ssize_t n = diag.shape[0]
    cdef Py_ssize_t i
    cdef int count = 0
    cdef double d = diag[0] - lam
    if fabs(d) < pivmin:
        d = -pivmin
    if d < 0.0:
        count += 1
    for i in range(1, n):
        d = diag[i] - lam - off[i - 1] * off[i - 1] / d
        if fabs(d) < pivmin:
            d = -pivmin
        if d < 0.0:
            count += 1
    return count


def count_below(diag, off, double lam):
    """Number of eigenvalues of the symmetric tridiagonal matrix below lam."""
    cdef const double[::1] dv = np.ascontiguousarray(diag, dtype=np.float64)
    cdef const double[::1] ov = np.ascontiguousarray(off, dtype=np.float64)
    cdef double pivmin = _pivmin(ov)
    cdef int out
    with nogil:
        out = _count_below(dv, ov, lam, pivmin)
    return out


cdef void _gershgorin(const double[::1] diag, const double[::1] off,
                      double* lo, double* hi) noexcept nogil:
    cdef Py_ssize_t n = diag.shape[0]
    cdef Py_ssize_t i
    cdef double radius, a, b
    lo[0] = diag[0]
    hi[0] = diag[0]
    for i in range(n):
        radius = 0.0
        if i > 0:
            radius += fabs(off[i - 1])
        if i < n - 1:
            radius += fabs(off[i])
        a = diag[i] - radius
        b = diag[i] + radius
        if a < lo[0]:
            lo[0] = a
        if b > hi[0]:
            hi[0] = b
    # ensure count(hi) == n even with an eigenvalue on the bound
    hi[0] += 1e-3 * (1.0 if fabs(hi[0]) < 1.0 else fabs(hi[0]))


cdef double _bisect_kth(const double[::1] diag, const double[::1] off,
                        long k, double lo, double hi,
                        double rel_tol, double pivmin) noexcept nogil:
    cdef double mid, scale
    cdef int it
    for it in range(_MAX_BISECT_ITERS):
        scale = fabs(lo)
        if fabs(hi) > scale:
            scale = fabs(hi)
        if scale < 1.0:
            scale = 1.0
        if hi - lo <= rel_tol * scale:
            break
        mid = 0.5 * (lo + hi)
        if _count_below(diag, off, mid, pivmin) > k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def bisect_indices(diag, off, indices, double rel_tol=1e-12):
    """Eigenvalues with the given ascending-order indices, by Sturm bisection."""
    cdef const double[::1] dv = np.ascontiguousarray(diag, dtype=np.float64)
    cdef const double[::1] ov = np.ascontiguousarray(off, dtype=np.float64)
    cdef long[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    out_arr = np.empty(idx.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double pivmin = _pivmin(ov)
    cdef double glo, ghi
    cdef Py_ssize_t j
    with nogil:
        _gershgorin(dv, ov, &glo, &ghi)
        for j in range(idx.shape[0]):
            out[j] = _bisect_kth(dv, ov, idx[j], glo, ghi, rel_tol, pivmin)
    return out_arr


def solve_shifted(diag, off, double lam, rhs):
    """Solve (T - lam I) x = rhs by the Thomas algorithm with a pivot floor
    of machine epsilon times the matrix scale (the classic inverse-iteration
    fix for shifts sitting on an eigenvalue)."""
    cdef const double[::1] dv = np.ascontiguousarray(diag, dtype=np.float64)
    cdef const double[::1] ov = np.ascontiguousarray(off, dtype=np.float64)
    x_arr = np.array(rhs, dtype=np.float64)
    cdef double[::1] x = x_arr
    cdef Py_ssize_t n = dv.shape[0]
    c_arr = np.empty(n - 1 if n > 1 else 0, dtype=np.float64)
    cdef double[::1] c = c_arr
    cdef double _EPS = 2.220446049250313e-16
    cdef double dmax = 0.0
    cdef double omax = 0.0
    cdef double d
    cdef Py_ssize_t i
    for i in range(n):
        if fabs(dv[i]) > dmax:
            dmax = fabs(dv[i])
    for i in range(n - 1):
        if fabs(ov[i]) > omax:
            omax = fabs(ov[i])
    cdef double pivmin = _EPS * (dmax + omax + fabs(lam))
    with nogil:
        d = dv[0] - lam
        if fabs(d) < pivmin:
            d = pivmin if d >= 0 else -pivmin
        for i in range(n - 1):
            c[i] = ov[i] / d
            x[i] /= d
            d = dv[i + 1] - lam - ov[i] * c[i]
            if fabs(d) < pivmin:
                d = pivmin if d >= 0 else -pivmin
            x[i + 1] -= ov[i] * x[i]
        x[n - 1] /= d
        for i in range(n - 2, -1, -1):
            x[i] -= c[i] * x[i + 1]
    return x_arr
