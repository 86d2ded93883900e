"""Deterministic quadrature oracles.

Gauss-Legendre rules from Newton iteration on the Legendre recurrence,
the periodic trapezoid rule, polar tensor grids over disks and annuli,
shoelace curve areas, and a principal-value radial rule based on
symmetric excision with Richardson extrapolation in the excision
half-width.  Node counts are fixed by the caller; nothing adapts.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import _kernels


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    domain: tuple

    def __post_init__(self):
        self.nodes.flags.writeable = False
        self.weights.flags.writeable = False


@functools.lru_cache(maxsize=None)
def _legendre_base(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights of the n-point rule on [-1, 1] by vectorized Newton."""
    # Abramowitz-Stegun initial guess, then Newton on P_n
    i = np.arange(1, n + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    dp = np.ones_like(x)
    for it in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        if n == 1:
            pn, pnm1 = p1, p0
        else:
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            pn, pnm1 = p1, p0
        dp = n * (x * pn - pnm1) / (x * x - 1.0)
        dx = pn / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise RuntimeError("Legendre Newton iteration failed to converge")
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    x = np.ascontiguousarray(x[order])
    w = np.ascontiguousarray(w[order])
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def gauss_legendre(n: int, a: float = -1.0, b: float = 1.0) -> QuadratureRule:
    """n-point Gauss-Legendre rule on [a, b]; exact to degree 2n - 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not a < b:
        raise ValueError("need a < b")
    x, w = _legendre_base(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return QuadratureRule(mid + half * x, half * w, ("legendre", float(a), float(b)))


def periodic_trapezoid(g: Callable[[float], complex], n: int,
                       period: float = 2.0 * math.pi) -> complex:
    """(period/n) * sum of g at n equispaced points; spectral for smooth g."""
    if n < 4:
        raise ValueError("n must be >= 4")
    h = period / n
    vals = [complex(g(k * h)) for k in range(n)]
    vr = np.array([v.real for v in vals])
    vi = np.array([v.imag for v in vals])
    re, im = _kernels.neumaier_csum(vr, vi)
    return complex(re * h, im * h)


def disk_integral(g: Callable[[complex], float], r_inner: float, r_outer: float,
                  n_rad: int = 64, n_ang: int = 256) -> float:
    """Integral of g over the annulus r_inner <= |z| <= r_outer.

    Gauss-Legendre in radius tensored with the trapezoid rule in angle;
    the integrand picks up the polar Jacobian rho.
    """
    if not 0.0 <= r_inner < r_outer:
        raise ValueError("need 0 <= r_inner < r_outer")
    rule = gauss_legendre(n_rad, r_inner, r_outer)
    dtheta = 2.0 * math.pi / n_ang
    ring = np.empty(n_ang)
    shells = np.empty(n_rad)
    for j in range(n_rad):
        rho = rule.nodes[j]
        for k in range(n_ang):
            theta = k * dtheta
            ring[k] = g(complex(rho * math.cos(theta), rho * math.sin(theta)))
        shells[j] = rule.weights[j] * rho * dtheta * _kernels.neumaier_sum(ring)
    return _kernels.neumaier_sum(shells)


def curve_area_shoelace(points: Sequence[complex],
                        derivatives: Sequence[complex] | None = None) -> float:
    """Signed area enclosed by a closed sampled curve.

    With points alone: the inscribed-polygon shoelace sum
    (1/2) sum (u_k v_{k+1} - u_{k+1} v_k), which converges at O(n^-2)
    for smooth curves.  With `derivatives` (samples of dw/dt over one
    period, same length), the spectrally accurate form
    (1/2) (T/n) sum (u_k v'_k - v_k u'_k) with T = 2 pi is used instead.
    Positively oriented curves give positive area.
    """
    pts = [complex(p) for p in points]
    n = len(pts)
    if n < 3:
        raise ValueError("need at least 3 points")
    if derivatives is None:
        terms = np.empty(n)
        for k in range(n):
            p = pts[k]
            q = pts[(k + 1) % n]
            terms[k] = p.real * q.imag - q.real * p.imag
        return 0.5 * _kernels.neumaier_sum(terms)
    der = [complex(d) for d in derivatives]
    if len(der) != n:
        raise ValueError("derivatives must match points in length")
    terms = np.empty(n)
    for k in range(n):
        terms[k] = pts[k].real * der[k].imag - pts[k].imag * der[k].real
    return 0.5 * (2.0 * math.pi / n) * _kernels.neumaier_sum(terms)


def _excised_integral(g: Callable[[float], float], s: float, eps: float,
                      n: int) -> float:
    """Integral of g over (0, s-eps) u (s+eps, 1) with matched dyadic panels.

    Panels are laid out at dyadic distances from the pole and summed in
    matched left/right pairs so the +-1/d parts of a simple pole cancel
    before they can swamp the compensated sum.
    """
    rule = _legendre_base(n)
    x, w = rule

    def panel(a: float, b: float) -> float:
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        vals = np.empty(n)
        for j in range(n):
            vals[j] = half * w[j] * g(mid + half * x[j])
        return _kernels.neumaier_sum(vals)

    left = []   # panels marching away from the pole toward 0
    d = eps
    while s - d > 0.0:
        d2 = 2.0 * d
        a = max(s - d2, 0.0)
        left.append(panel(a, s - d))
        d = d2
    right = []  # panels marching away from the pole toward 1
    d = eps
    while s + d < 1.0:
        d2 = 2.0 * d
        b = min(s + d2, 1.0)
        right.append(panel(s + d, b))
        d = d2
    pieces = []
    for j in range(max(len(left), len(right))):
        if j < len(left):
            pieces.append(left[j])
        if j < len(right):
            pieces.append(right[j])
    return _kernels.neumaier_sum(np.array(pieces))


def principal_value_radial(g: Callable[[float], float], singularity: float,
                           n: int = 16) -> float:
    """Cauchy principal value of integral of g over (0, 1).

    Symmetric excision: E(eps) over (0, s-eps) u (s+eps, 1) is computed
    for eps in {1e-2, 1e-3, 1e-4}; for a simple pole E(eps) = PV - c*eps
    + O(eps^3), so linear Richardson in eps recovers the limit.  Raises
    if the estimates diverge (no principal value).
    """
    s = float(singularity)
    if not 0.0 < s < 1.0:
        raise ValueError("singularity must lie in (0, 1)")
    if n < 2:
        raise ValueError("n must be >= 2")
    eps = (1e-2, 1e-3, 1e-4)
    e1, e2, e3 = (_excised_integral(g, s, e, n) for e in eps)
    d1 = abs(e2 - e1)
    d2 = abs(e3 - e2)
    scale = max(abs(e1), abs(e2), abs(e3), 1.0)
    if d2 > d1 and d2 > 1e-9 * scale:
        raise RuntimeError("principal value extrapolation diverges: "
                           f"E(eps) = {e1!r}, {e2!r}, {e3!r}")

    def richardson(ea, eb, va, vb):
        return (ea * vb - eb * va) / (ea - eb)

    r12 = richardson(eps[0], eps[1], e1, e2)
    r23 = richardson(eps[1], eps[2], e2, e3)
    # r23 is the better estimate; r12 only guards the divergence check
    del r12
    return r23
