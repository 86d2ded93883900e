# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, twin of _pykernels.py.

Same branch structure, same operation order, same compensated sums as
the pure Python module, so both backends produce bit-identical floats.
Any change here must be mirrored there.
"""

from libc.math cimport fabs

BACKEND = "c"


def neumaier_sum(const double[::1] xs):
    """Compensated sum of a float sequence (Neumaier's variant of Kahan)."""
    cdef double s = 0.0, comp = 0.0, x, t
    cdef Py_ssize_t k
    for k in range(xs.shape[0]):
        x = xs[k]
        t = s + x
        if fabs(s) >= fabs(x):
            comp += (s - t) + x
        else:
            comp += (x - t) + s
        s = t
    return s + comp


def neumaier_csum(const double[::1] xr, const double[::1] xi):
    """Compensated sum of a complex sequence given as parallel re/im parts."""
    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0, x, t, y, u
    cdef Py_ssize_t k, n = xr.shape[0]
    for k in range(n):
        x = xr[k]
        t = sr + x
        if fabs(sr) >= fabs(x):
            cr += (sr - t) + x
        else:
            cr += (x - t) + sr
        sr = t
        y = xi[k]
        u = si + y
        if fabs(si) >= fabs(y):
            ci += (si - u) + y
        else:
            ci += (y - u) + si
        si = u
    return sr + cr, si + ci


def weighted_abs2_sum(const double[::1] vr, const double[::1] vi, const double[::1] w):
    """Compensated sum of w_k * |v_k|^2."""
    cdef double s = 0.0, comp = 0.0, x, t
    cdef Py_ssize_t k, n = vr.shape[0]
    for k in range(n):
        x = w[k] * (vr[k] * vr[k] + vi[k] * vi[k])
        t = s + x
        if fabs(s) >= fabs(x):
            comp += (s - t) + x
        else:
            comp += (x - t) + s
        s = t
    return s + comp


def weighted_conj_dot(const double[::1] ar, const double[::1] ai,
                      const double[::1] br, const double[::1] bi, const double[::1] w):
    """Compensated sum of w_k * a_k * conj(b_k)."""
    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0, x, t, y, u
    cdef Py_ssize_t k, n = ar.shape[0]
    for k in range(n):
        x = w[k] * (ar[k] * br[k] + ai[k] * bi[k])
        t = sr + x
        if fabs(sr) >= fabs(x):
            cr += (sr - t) + x
        else:
            cr += (x - t) + sr
        sr = t
        y = w[k] * (ai[k] * br[k] - ar[k] * bi[k])
        u = si + y
        if fabs(si) >= fabs(y):
            ci += (si - u) + y
        else:
            ci += (y - u) + si
        si = u
    return sr + cr, si + ci


cdef void _eval_one(Py_ssize_t min_exp, const double[::1] cr, const double[::1] ci,
                    double zr, double zi, double* out_r, double* out_i):
    cdef double pr = 1.0, pi = 0.0, d, ir, ii, tmp
    cdef double sr = 0.0, compr = 0.0, si = 0.0, compi = 0.0, x, t, y, u
    cdef Py_ssize_t k, n = cr.shape[0]
    if min_exp >= 0:
        for k in range(min_exp):
            tmp = pr * zr - pi * zi
            pi = pr * zi + pi * zr
            pr = tmp
    else:
        d = zr * zr + zi * zi
        ir = zr / d
        ii = -zi / d
        for k in range(-min_exp):
            tmp = pr * ir - pi * ii
            pi = pr * ii + pi * ir
            pr = tmp
    for k in range(n):
        x = cr[k] * pr - ci[k] * pi
        t = sr + x
        if fabs(sr) >= fabs(x):
            compr += (sr - t) + x
        else:
            compr += (x - t) + sr
        sr = t
        y = cr[k] * pi + ci[k] * pr
        u = si + y
        if fabs(si) >= fabs(y):
            compi += (si - u) + y
        else:
            compi += (y - u) + si
        si = u
        tmp = pr * zr - pi * zi
        pi = pr * zi + pi * zr
        pr = tmp
    out_r[0] = sr + compr
    out_i[0] = si + compi


def eval_series(min_exp, const double[::1] cr, const double[::1] ci, double zr, double zi):
    """Evaluate sum_k c_k z^(min_exp+k) over the dense coefficient table.

    The power z^e is carried as a running product in exponent order.
    Caller guarantees z != 0 whenever min_exp < 0.
    """
    cdef double outr = 0.0, outi = 0.0
    _eval_one(min_exp, cr, ci, zr, zi, &outr, &outi)
    return outr, outi


def eval_series_many(min_exp, const double[::1] cr, const double[::1] ci,
                     const double[::1] zr, const double[::1] zi,
                     double[::1] out_r, double[::1] out_i):
    """Evaluate one series at many points, filling the out buffers."""
    cdef Py_ssize_t j, m = zr.shape[0]
    cdef Py_ssize_t me = min_exp
    cdef double outr, outi
    for j in range(m):
        _eval_one(me, cr, ci, zr[j], zi[j], &outr, &outi)
        out_r[j] = outr
        out_i[j] = outi
    return None


def double_contour_sum(const double[::1] fr, const double[::1] fi,
                       const double[::1] wr, const double[::1] wi,
                       const double[::1] dfr, const double[::1] dfi):
    """Double trapezoid sum for the two-circle area functional.

    Off-diagonal term: |f(w_j) - f(w_k)|^2 / |w_j - w_k|^2.
    Diagonal (j == k): the limit |f'(w_j)|^2.
    Row-major order, compensated.
    """
    cdef Py_ssize_t n = fr.shape[0], j, k
    cdef double s = 0.0, comp = 0.0, x, t, nr, ni, dr, di
    for j in range(n):
        for k in range(n):
            if j == k:
                x = dfr[j] * dfr[j] + dfi[j] * dfi[j]
            else:
                nr = fr[j] - fr[k]
                ni = fi[j] - fi[k]
                dr = wr[j] - wr[k]
                di = wi[j] - wi[k]
                x = (nr * nr + ni * ni) / (dr * dr + di * di)
            t = s + x
            if fabs(s) >= fabs(x):
                comp += (s - t) + x
            else:
                comp += (x - t) + s
            s = t
    return s + comp


def binomial_square_scan(double alpha, double w0, double w1, double threshold,
                         long long cap, long long min_k,
                         const long long[::1] snaps, double[::1] out_sums):
    """Accumulate sum of (w0 + w1*k) * binom(alpha, k)^2 for k = 0..cap-1.

    binom(alpha, k) follows the ratio recurrence C_{k+1} = C_k (alpha-k)/(k+1).
    out_sums[j] receives the partial sum of the first snaps[j] terms; snaps
    must be ascending with snaps[-1] == cap.  Stops early once
    |term| < threshold with k >= min_k (after adding that term), padding
    the remaining snapshots with the final sum.

    Returns (k_stop, hit_threshold, last_term) where k_stop is the index of
    the last term added.
    """
    cdef double s = 0.0, comp = 0.0, c = 1.0, term = 0.0, t, total
    cdef Py_ssize_t j = 0, nsnap = snaps.shape[0]
    cdef long long k, k_stop = -1
    cdef int hit = 0
    for k in range(cap):
        term = (w0 + w1 * k) * (c * c)
        t = s + term
        if fabs(s) >= fabs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        k_stop = k
        while j < nsnap and snaps[j] == k + 1:
            out_sums[j] = s + comp
            j += 1
        if k >= min_k and fabs(term) < threshold:
            hit = 1
            break
        c = c * ((alpha - k) / (k + 1))
    total = s + comp
    while j < nsnap:
        out_sums[j] = total
        j += 1
    return k_stop, hit, term
