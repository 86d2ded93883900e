"""Chebyshev polynomials and their Bergman orthogonality on ellipse interiors.

The ellipse with foci +-1 and semi-axes a = cosh c, b = sinh c carries
the parameter rho = (a + b)^2 = e^{2c}.  Over its interior the second
kind polynomials U_n are orthogonal in the area inner product, with
closed-form norms, and the derivative T_n' has an elementary area
integral.  The quadrature inner product maps the ellipse to the
w-rectangle u in [0, pi], v in [-c, c] through z = cos w, whose Jacobian
|sin w|^2 is smooth, and integrates with Gauss-Legendre in both
directions (the integrand is not pi-periodic in u for mixed products,
so the angular direction gets a Gauss rule too, at 2*order nodes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .quadrature import gauss_legendre
from .series import FormalSeries, evaluate_many


def chebyshev_T(n: int, z: complex) -> complex:
    """First-kind Chebyshev value by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    z = complex(z)
    if n == 0:
        return 1.0 + 0j
    tkm1, tk = 1.0 + 0j, z
    for _ in range(n - 1):
        tkm1, tk = tk, 2.0 * z * tk - tkm1
    return tk


def chebyshev_U(n: int, z: complex) -> complex:
    """Second-kind Chebyshev value by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    z = complex(z)
    if n == 0:
        return 1.0 + 0j
    ukm1, uk = 1.0 + 0j, 2.0 * z
    for _ in range(n - 1):
        ukm1, uk = uk, 2.0 * z * uk - ukm1
    return uk


def chebyshev_T_derivative(n: int, z: complex) -> complex:
    """T_n'(z) from the differentiated recurrence.

    Runs T and T' recurrences in lockstep: T'_{k+1} = 2 T_k + 2z T'_k - T'_{k-1}.
    Provides the independent check (n+1) U_n = T'_{n+1}.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    z = complex(z)
    if n == 0:
        return 0j
    tkm1, tk = 1.0 + 0j, z
    dkm1, dk = 0j, 1.0 + 0j
    for _ in range(n - 1):
        tkm1, tk, dkm1, dk = tk, 2.0 * z * tk - tkm1, dk, 2.0 * tk + 2.0 * z * dk - dkm1
    return dk


def chebyshev_T_series(n: int) -> FormalSeries:
    """Coefficients of T_n as a series."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return FormalSeries({0: 1.0 + 0j}, 0, 0)
    prev = {0: 1.0 + 0j}
    cur = {1: 1.0 + 0j}
    for _ in range(n - 1):
        nxt = {e + 1: 2.0 * c for e, c in cur.items()}
        for e, c in prev.items():
            nxt[e] = nxt.get(e, 0j) - c
        prev, cur = cur, nxt
    return FormalSeries(cur, 0, n)


def chebyshev_U_series(n: int) -> FormalSeries:
    """Coefficients of U_n as a series."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return FormalSeries({0: 1.0 + 0j}, 0, 0)
    prev = {0: 1.0 + 0j}
    cur = {1: 2.0 + 0j}
    for _ in range(n - 1):
        nxt = {e + 1: 2.0 * c for e, c in cur.items()}
        for e, c in prev.items():
            nxt[e] = nxt.get(e, 0j) - c
        prev, cur = cur, nxt
    return FormalSeries(cur, 0, n)


@dataclass(frozen=True)
class EllipseGeometry:
    """Ellipse with foci +-1: semi-axes cosh c, sinh c and rho = (a+b)^2."""

    c: float

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError("c must be positive")

    @property
    def a(self) -> float:
        return math.cosh(self.c)

    @property
    def b(self) -> float:
        return math.sinh(self.c)

    @property
    def rho(self) -> float:
        s = self.a + self.b
        return s * s


def bergman_norm_U(n: int, geom: EllipseGeometry) -> float:
    """Squared area norm of U_n over the ellipse: pi/(4(n+1)) (rho^{n+1} - rho^{-n-1})."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rho = geom.rho
    k = n + 1
    return math.pi / (4.0 * k) * (rho ** k - rho ** (-k))


def bergman_norm_U_hyperbolic(n: int, geom: EllipseGeometry) -> float:
    """The same norm in its hyperbolic printing: pi/(2(n+1)) sinh(2(n+1)c)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k = n + 1
    return math.pi / (2.0 * k) * math.sinh(2.0 * k * geom.c)


def _p_scale(n: int, geom: EllipseGeometry) -> float:
    k = n + 1
    return 2.0 * math.sqrt(k / math.pi) / math.sqrt(geom.rho ** k - geom.rho ** (-k))


def orthonormal_P(n: int, geom: EllipseGeometry, z: complex) -> complex:
    """Orthonormal polynomial value 2 sqrt((n+1)/pi) (rho^{n+1}-rho^{-n-1})^{-1/2} U_n(z)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _p_scale(n, geom) * chebyshev_U(n, z)


def orthonormal_P_series(n: int, geom: EllipseGeometry) -> FormalSeries:
    """Series form of P_n (U_n rescaled to unit area norm)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return chebyshev_U_series(n).scaled(_p_scale(n, geom))


def bergman_inner_product(p: FormalSeries, q: FormalSeries,
                          geom: EllipseGeometry, order: int = 32) -> complex:
    """Area inner product over the ellipse interior, conjugate-linear in p.

    Returns the quadrature value of integral conj(p(z)) q(z) dA(z).
    z = cos(u + iv) maps u in [0, pi], v in [-c, c] one-to-one onto the
    ellipse interior (the line v = 0 collapses to the slit [-1, 1], which
    has measure zero).  The area element picks up the Jacobian |sin w|^2.
    Gauss-Legendre with 2*order nodes in u and order nodes in v.
    """
    if order < 8:
        raise ValueError("order must be >= 8")
    ru = gauss_legendre(2 * order, 0.0, math.pi)
    rv = gauss_legendre(order, -geom.c, geom.c)
    w = ru.nodes[None, :] + 1j * rv.nodes[:, None]  # v-major grid
    z = np.cos(w)
    sw = np.sin(w)
    jac = sw.real ** 2 + sw.imag ** 2
    weight = (ru.weights[None, :] * rv.weights[:, None] * jac).ravel()
    zf = z.ravel()
    pv = evaluate_many(p, zf)
    qv = evaluate_many(q, zf)
    re, im = _kernels.weighted_conj_dot(
        np.ascontiguousarray(pv.real), np.ascontiguousarray(pv.imag),
        np.ascontiguousarray(qv.real), np.ascontiguousarray(qv.imag),
        np.ascontiguousarray(weight))
    return complex(re, im)


def tprime_area(n: int, geom: EllipseGeometry) -> float:
    """Area integral of |T_n'|^2 over the ellipse: (n pi/4)(rho^n - rho^-n).

    Equals n^2 * bergman_norm_U(n-1, geom) since T_n' = n U_{n-1};
    n = 0 gives 0 (T_0' vanishes identically).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0.0
    rho = geom.rho
    return n * math.pi / 4.0 * (rho ** n - rho ** (-n))
