"""Named regions and the special-function identities behind their areas.

Circle, ellipse, cardioid, and the m-leafed lemniscate |w^m - 1| = 1,
with the Gamma function, the two squared-binomial sum identities, and
the point-mass disk integrals I_p, J_p under a principal-value reading
of their radial reductions.

The binomial-square sums converge like k^(-1-p) with small p = O(alpha),
so plain truncation stalls far from the Gamma closed forms.  Where a
term cap binds, partial sums at dyadic depths feed a Richardson ladder
with the known tail exponent; the completed value uses only scanned
terms, no Gamma.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from . import _kernels
from .areas import AreaReport, LaurentTail
from .quadrature import _legendre_base

_SQRT_2PI = math.sqrt(2.0 * math.pi)

# cardioid r = (1 + cos theta)/2 encloses 3 pi / 8
CARDIOID_AREA_CLOSED = 3.0 * math.pi / 8.0

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(x: float) -> float:
    """Gamma function for real x > 0 (Lanczos, g = 7, 9 coefficients)."""
    x = float(x)
    if x <= 0.0:
        raise ValueError("gamma requires x > 0")
    if x < 0.5:
        # one recurrence step instead of reflection; keeps x > 0 only
        return gamma(x + 1.0) / x
    x -= 1.0
    a = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        a += _LANCZOS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (x + 0.5) * math.exp(-t) * a


class LemniscateSpec:
    """The m-leafed symmetric lemniscate {w : |w^m - 1| = 1}."""

    __slots__ = ("m",)

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be >= 1")
        object.__setattr__(self, "m", int(m))

    def __setattr__(self, name, value):
        raise AttributeError("LemniscateSpec is immutable")

    @property
    def phi_max(self) -> float:
        return math.pi / (2.0 * self.m)

    def boundary_radius(self, phi: float) -> float:
        """Polar boundary rho(phi) = 2^(1/m) cos^(1/m)(m phi), |phi| <= pi/(2m)."""
        if abs(phi) > self.phi_max + 1e-15:
            raise ValueError("phi outside the leaf sector |phi| <= pi/(2m)")
        c = max(math.cos(self.m * phi), 0.0)
        return 2.0 ** (1.0 / self.m) * c ** (1.0 / self.m)

    def __repr__(self):
        return f"LemniscateSpec(m={self.m})"


def _richardson_ladder(sums: Iterable[float], p: float) -> tuple[float, float]:
    """Extrapolate dyadic partial sums S(N/2^j)..S(N) with tail ~ c N^-p.

    Successive levels remove N^-p, N^-(p+1), ...  Returns (limit, magnitude
    of the final level's change), the latter serving as the error estimate.
    """
    level = list(sums)
    if len(level) < 2:
        return level[0], 0.0
    prev_top = level[-1]
    l = 0
    while len(level) > 1:
        fac = 2.0 ** (p + l) - 1.0
        level = [level[j + 1] + (level[j + 1] - level[j]) / fac
                 for j in range(len(level) - 1)]
        l += 1
        if len(level) > 1:
            prev_top = level[-1]
    return level[0], abs(level[0] - prev_top)


def _dyadic_snapshots(count: int) -> list[int]:
    """Snapshot term counts base*2^j topping out near `count` (>= 16)."""
    if count >= 48:
        base = count // 16
        return [base, 2 * base, 4 * base, 8 * base, 16 * base]
    if count < 8:
        return [count]
    base = count // 8
    return [base, 2 * base, 4 * base, 8 * base]


def _binomial_scan(alpha: float, w0: float, w1: float, threshold: float,
                   cap: int, min_k: int, snaps: list[int]):
    out = np.empty(len(snaps))
    snaps_arr = np.array(snaps, dtype=np.longlong)
    k_stop, hit, last_term = _kernels.binomial_square_scan(
        alpha, w0, w1, threshold, cap, min_k, snaps_arr, out)
    return out, k_stop, hit, last_term


def _completed_sum(alpha: float, w0: float, w1: float, p: float,
                   threshold: float, cap: int, min_k: int) -> float:
    """Scan terms (w0 + w1 k) C_k(alpha)^2 and complete the tail if capped.

    If the term-size threshold stops the scan the plain partial sum is
    already converged and is returned as is.  If the cap binds, the tail
    still carries ~N^-p mass and the Richardson ladder supplies it from
    the dyadic partial sums.
    """
    snaps = _dyadic_snapshots(cap)
    sums, k_stop, hit, _ = _binomial_scan(alpha, w0, w1, threshold, cap,
                                          min_k, snaps)
    if hit:
        return float(sums[-1])
    limit, _ = _richardson_ladder(sums.tolist(), p)
    return limit


def binomial_sq_sum(alpha: float) -> tuple[float, float]:
    """Sum of binom(alpha, k)^2 vs the closed form Gamma(2a+1)/Gamma(a+1)^2.

    The scan stops when a term drops below 1e-14 or at 10^6 terms; in the
    capped case the unscanned tail (exponent 1 + 2 alpha) is completed by
    Richardson extrapolation of dyadic partial sums.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must lie in (0, 1]")
    numeric = _completed_sum(alpha, 1.0, 0.0, 1.0 + 2.0 * alpha,
                             1e-14, 10 ** 6, 1)
    closed = gamma(2.0 * alpha + 1.0) / gamma(alpha + 1.0) ** 2
    return numeric, closed


def binomial_sq_weighted_sum(alpha: float) -> tuple[float, float]:
    """Sum of k binom(alpha, k)^2 vs the closed form Gamma(2a)/Gamma(a)^2."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must lie in (0, 1]")
    numeric = _completed_sum(alpha, 0.0, 1.0, 2.0 * alpha,
                             1e-14, 10 ** 6, 1)
    closed = gamma(2.0 * alpha) / gamma(alpha) ** 2
    return numeric, closed


def lemniscate_tail(m: int, trunc: int) -> LaurentTail:
    """Exterior-map tail of the m-leafed lemniscate: b_{mn-1} = C_n^{1/m}.

    From z (1 + z^-m)^{1/m} = z + sum_{n>=1} C_n^{1/m} z^{-(mn-1)}.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if trunc < 1:
        raise ValueError("trunc must be >= 1")
    alpha = 1.0 / m
    b = [0j] * (m * trunc)
    c = 1.0
    for n in range(1, trunc + 1):
        c = c * ((alpha - (n - 1)) / n)
        b[m * n - 1] = complex(c)
    return LaurentTail(b)


def _lemniscate_series_sums(m: int, trunc: int, snaps: list[int]):
    # area partial sums pi * sum_{n=0}^{N-1} (1 - m n) C_n^2 at the snapshots
    alpha = 1.0 / m
    sums, k_stop, hit, last_term = _binomial_scan(
        alpha, 1.0, -float(m), 0.0, trunc + 1, 0, snaps)
    return sums, last_term


def lemniscate_area_series(m: int, trunc: int,
                           extrapolate: bool = True) -> AreaReport:
    """Lemniscate area from the squared-coefficient series.

    A = pi (sum C_n^2 - m sum n C_n^2) over n = 0..trunc with C_n the
    binomial coefficients of exponent 1/m.  The terms decay like
    n^(-1-2/m), so the plain truncated sum (extrapolate=False) converges
    very slowly; by default the dyadic Richardson ladder completes the
    tail from the scanned terms.  est_error is the final ladder increment
    when extrapolating, else the integral estimate of the dropped tail
    (last term times trunc m / 2).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if trunc < 1:
        raise ValueError("trunc must be >= 1")
    count = trunc + 1
    if extrapolate and count >= 16:
        snaps = _dyadic_snapshots(count)
        sums, _ = _lemniscate_series_sums(m, trunc, snaps)
        value, step = _richardson_ladder([math.pi * s for s in sums.tolist()],
                                         2.0 / m)
        return AreaReport(value, "series", trunc, step)
    sums, last_term = _lemniscate_series_sums(m, trunc, [count])
    value = math.pi * float(sums[-1])
    # terms decay like n^(-1-p) with p = 2/m; dropped tail ~ |term| N / p
    tail = abs(math.pi * last_term) * trunc * m / 2.0
    return AreaReport(value, "series", trunc, tail)


def lemniscate_area_closed(m: int) -> AreaReport:
    """Closed-form lemniscate area 2^(2/m - 1) Gamma(1/m + 1/2)/Gamma(1/m + 1) sqrt(pi)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    a = 1.0 / m
    value = 2.0 ** (2.0 * a - 1.0) * gamma(a + 0.5) / gamma(a + 1.0) * math.sqrt(math.pi)
    return AreaReport(value, "closed_form", 0, 0.0)


def _polar_panels(mu: float, order: int) -> float:
    """Integral of cos^mu(t) over [0, pi/2] on a mesh graded into the endpoint.

    cos^mu has unbounded derivatives at pi/2 for non-even mu, so panels
    halve dyadically toward it; the remaining sliver below width
    (pi/2) 2^-46 contributes < 1e-16 and is dropped.
    """
    x, w = _legendre_base(order)
    half_pi = 0.5 * math.pi
    vals = np.empty(order)
    panels = []
    # panel k spans [pi/2 (1 - 2^-k), pi/2 (1 - 2^-(k+1))], marching into pi/2
    for k in range(46):
        a = half_pi * (1.0 - 2.0 ** (-k))
        b = half_pi * (1.0 - 2.0 ** (-(k + 1)))
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        for j in range(order):
            t = mid + half * x[j]
            vals[j] = half * w[j] * max(math.cos(t), 0.0) ** mu
        panels.append(_kernels.neumaier_sum(vals))
    return _kernels.neumaier_sum(np.array(panels))


def lemniscate_area_polar(m: int, order: int = 16) -> AreaReport:
    """Lemniscate area by polar quadrature.

    A = 2^(2/m) m * integral of cos^(2/m)(m phi) over [0, pi/(2m)], i.e.
    2^(2/m) * integral of cos^(2/m) over [0, pi/2] after t = m phi.
    est_error compares against the same mesh at order + 8.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if order < 16:
        raise ValueError("order must be >= 16")
    mu = 2.0 / m
    scale = 2.0 ** mu
    value = scale * _polar_panels(mu, order)
    refined = scale * _polar_panels(mu, order + 8)
    return AreaReport(value, "quadrature", order, abs(value - refined))


def cardioid_area(order: int = 64) -> AreaReport:
    """Area enclosed by the cardioid r = (1 + cos theta)/2 via (1/2) int r^2.

    The integrand is a degree-2 trigonometric polynomial, so the
    trapezoid rule is exact for order >= 8 and the result is 3 pi / 8.
    """
    if order < 8:
        raise ValueError("order must be >= 8")

    def q(n: int) -> float:
        h = 2.0 * math.pi / n
        vals = np.empty(n)
        for k in range(n):
            rr = 0.5 * (1.0 + math.cos(k * h))
            vals[k] = rr * rr
        return 0.5 * h * _kernels.neumaier_sum(vals)

    value = q(order)
    return AreaReport(value, "quadrature", order, abs(value - q(2 * order)))


class PointMassSpec:
    """Distinct sample points z_p strictly inside the punctured unit disk."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[complex]):
        pts = tuple(complex(p) for p in points)
        for p in pts:
            if not 0.0 < abs(p) < 1.0:
                raise ValueError(f"point {p} must satisfy 0 < |z| < 1")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("PointMassSpec is immutable")

    def __len__(self):
        return len(self.points)


def pointmass_I(z_p: complex) -> float:
    """I_p = log((1 - |z_p|^2)/|z_p|^2) for 0 < |z_p| < 1.

    Matches the principal value of the radial reduction
    integral of 2r/(r^2 - |z_p|^2) over (0, 1); the raw double integral
    diverges and is not asserted.
    """
    s2 = abs(complex(z_p)) ** 2
    if not 0.0 < s2 < 1.0:
        raise ValueError("need 0 < |z_p| < 1")
    return math.log((1.0 - s2) / s2)


def pointmass_J(z_p: complex) -> float:
    """J_p = 1/2 + 2|z_p|^2 log((1 - |z_p|^2)/|z_p|^2) for 0 < |z_p| < 1.

    PV companion integrand: r (r^2 + 3|z_p|^2)/(r^2 - |z_p|^2) over (0, 1).
    """
    s2 = abs(complex(z_p)) ** 2
    if not 0.0 < s2 < 1.0:
        raise ValueError("need 0 < |z_p| < 1")
    return 0.5 + 2.0 * s2 * math.log((1.0 - s2) / s2)


def pointmass_sums(spec: PointMassSpec) -> tuple[float, float]:
    """Aggregates (pi sum I_p, sum 2 pi J_p) over the spec's points."""
    if len(spec) == 0:
        return 0.0, 0.0
    i_terms = np.array([pointmass_I(p) for p in spec.points])
    j_terms = np.array([pointmass_J(p) for p in spec.points])
    sum_i = math.pi * _kernels.neumaier_sum(i_terms)
    sum_j = 2.0 * math.pi * _kernels.neumaier_sum(j_terms)
    return sum_i, sum_j
