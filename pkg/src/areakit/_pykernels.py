"""Pure Python reference kernels.

Every routine here has a compiled twin in _ckernels.pyx with the same
branch structure, the same operation order, and the same compensated
summation, so both backends return bit-identical floats.  Keep the two
files in sync: any change here must be mirrored there.

Complex arithmetic is carried as (re, im) double pairs.  Reciprocals go
through conj(z)/|z|^2 rather than complex division so both backends
agree on rounding.
"""

from __future__ import annotations

BACKEND = "python"


def neumaier_sum(xs) -> float:
    """Compensated sum of a float sequence (Neumaier's variant of Kahan)."""
    s = 0.0
    comp = 0.0
    for x in xs:
        t = s + x
        if abs(s) >= abs(x):
            comp += (s - t) + x
        else:
            comp += (x - t) + s
        s = t
    return s + comp


def neumaier_csum(xr, xi):
    """Compensated sum of a complex sequence given as parallel re/im parts."""
    sr = 0.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    n = len(xr)
    for k in range(n):
        x = xr[k]
        t = sr + x
        if abs(sr) >= abs(x):
            cr += (sr - t) + x
        else:
            cr += (x - t) + sr
        sr = t
        y = xi[k]
        u = si + y
        if abs(si) >= abs(y):
            ci += (si - u) + y
        else:
            ci += (y - u) + si
        si = u
    return sr + cr, si + ci


def weighted_abs2_sum(vr, vi, w) -> float:
    """Compensated sum of w_k * |v_k|^2."""
    s = 0.0
    comp = 0.0
    n = len(vr)
    for k in range(n):
        x = w[k] * (vr[k] * vr[k] + vi[k] * vi[k])
        t = s + x
        if abs(s) >= abs(x):
            comp += (s - t) + x
        else:
            comp += (x - t) + s
        s = t
    return s + comp


def weighted_conj_dot(ar, ai, br, bi, w):
    """Compensated sum of w_k * a_k * conj(b_k)."""
    sr = 0.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    n = len(ar)
    for k in range(n):
        x = w[k] * (ar[k] * br[k] + ai[k] * bi[k])
        t = sr + x
        if abs(sr) >= abs(x):
            cr += (sr - t) + x
        else:
            cr += (x - t) + sr
        sr = t
        y = w[k] * (ai[k] * br[k] - ar[k] * bi[k])
        u = si + y
        if abs(si) >= abs(y):
            ci += (si - u) + y
        else:
            ci += (y - u) + si
        si = u
    return sr + cr, si + ci


def eval_series(min_exp: int, cr, ci, zr: float, zi: float):
    """Evaluate sum_k c_k z^(min_exp+k) over the dense coefficient table.

    The power z^e is carried as a running product in exponent order.
    Caller guarantees z != 0 whenever min_exp < 0.
    """
    # running power p = z^min_exp
    pr = 1.0
    pi = 0.0
    if min_exp >= 0:
        for _ in range(min_exp):
            pr, pi = pr * zr - pi * zi, pr * zi + pi * zr
    else:
        d = zr * zr + zi * zi
        ir = zr / d
        ii = -zi / d
        for _ in range(-min_exp):
            pr, pi = pr * ir - pi * ii, pr * ii + pi * ir
    sr = 0.0
    compr = 0.0
    si = 0.0
    compi = 0.0
    n = len(cr)
    for k in range(n):
        x = cr[k] * pr - ci[k] * pi
        t = sr + x
        if abs(sr) >= abs(x):
            compr += (sr - t) + x
        else:
            compr += (x - t) + sr
        sr = t
        y = cr[k] * pi + ci[k] * pr
        u = si + y
        if abs(si) >= abs(y):
            compi += (si - u) + y
        else:
            compi += (y - u) + si
        si = u
        pr, pi = pr * zr - pi * zi, pr * zi + pi * zr
    return sr + compr, si + compi


def eval_series_many(min_exp: int, cr, ci, zr, zi, out_r, out_i) -> None:
    """Evaluate one series at many points, filling the out buffers."""
    m = len(zr)
    for j in range(m):
        r, i = eval_series(min_exp, cr, ci, zr[j], zi[j])
        out_r[j] = r
        out_i[j] = i


def double_contour_sum(fr, fi, wr, wi, dfr, dfi) -> float:
    """Double trapezoid sum for the two-circle area functional.

    Off-diagonal term: |f(w_j) - f(w_k)|^2 / |w_j - w_k|^2.
    Diagonal (j == k): the limit |f'(w_j)|^2.
    Row-major order, compensated.
    """
    n = len(fr)
    s = 0.0
    comp = 0.0
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
            if abs(s) >= abs(x):
                comp += (s - t) + x
            else:
                comp += (x - t) + s
            s = t
    return s + comp


def binomial_square_scan(alpha: float, w0: float, w1: float, threshold: float,
                         cap: int, min_k: int, snaps, out_sums):
    """Accumulate sum of (w0 + w1*k) * binom(alpha, k)^2 for k = 0..cap-1.

    binom(alpha, k) follows the ratio recurrence C_{k+1} = C_k (alpha-k)/(k+1).
    out_sums[j] receives the partial sum of the first snaps[j] terms; snaps
    must be ascending with snaps[-1] == cap.  Stops early once
    |term| < threshold with k >= min_k (after adding that term), padding
    the remaining snapshots with the final sum.

    Returns (k_stop, hit_threshold, last_term) where k_stop is the index of
    the last term added.
    """
    s = 0.0
    comp = 0.0
    c = 1.0
    j = 0
    nsnap = len(snaps)
    k_stop = -1
    hit = 0
    term = 0.0
    for k in range(cap):
        term = (w0 + w1 * k) * (c * c)
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        k_stop = k
        while j < nsnap and snaps[j] == k + 1:
            out_sums[j] = s + comp
            j += 1
        if k >= min_k and abs(term) < threshold:
            hit = 1
            break
        c = c * ((alpha - k) / (k + 1))
    total = s + comp
    while j < nsnap:
        out_sums[j] = total
        j += 1
    return k_stop, hit, term
