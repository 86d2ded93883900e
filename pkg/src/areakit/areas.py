"""Coefficient-based area functionals and norms for series maps.

Covers the area of the region enclosed by the image of a circle under
z + sum b_n z^-n (with the univalence necessary condition), the L^2
norm of a Laurent series over an annulus with the coefficient bounds it
implies, Parseval means on circles, the radial-derivative and Green
boundary-integral area forms, the double-contour area functional, and
the area identity for z f'(z).  Each closed form here is paired with an
independent quadrature oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from . import _kernels
from .series import (FormalSeries, cauchy_product, derivative, evaluate_many,
                     log_derivative_coeffs, make_series)

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class AreaReport:
    """One computed area: the value, how it was obtained, and an error estimate."""

    value: float
    method: str  # "series" | "closed_form" | "quadrature"
    order: int
    est_error: float
    warnings: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError("area value must be finite")
        if self.est_error < 0:
            raise ValueError("est_error must be >= 0")

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "order": self.order,
            "est_error": self.est_error,
            "warnings": list(self.warnings),
        }


class LaurentTail:
    """Coefficients b_0..b_N of the exterior map z + sum_{n>=0} b_n z^-n.

    The leading z coefficient is implicitly 1.
    """

    __slots__ = ("b",)

    def __init__(self, b: Iterable[complex] = ()):
        object.__setattr__(self, "b", tuple(complex(c) for c in b))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentTail is immutable")

    def __len__(self):
        return len(self.b)

    def to_series(self) -> FormalSeries:
        """The full map as a series: exponent 1 plus exponents -n for b_n."""
        coeffs: list[tuple[int, complex]] = [(1, 1.0 + 0j)]
        for n, c in enumerate(self.b):
            if c != 0:
                coeffs.append((-n, c))
        min_exp = -(len(self.b) - 1) if self.b else 0
        return make_series(coeffs, min(min_exp, 0), 1)

    def __repr__(self):
        return f"LaurentTail({self.b!r})"


def tail_boundary_samples(tail: LaurentTail, r: float,
                          n: int) -> tuple[np.ndarray, np.ndarray]:
    """Image points and dw/dtheta samples of |z| = r under the tail's map.

    Returns (points, derivatives) over n equispaced angles, ready for
    the spectral form of curve_area_shoelace.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    if n < 3:
        raise ValueError("need at least 3 samples")
    psi = tail.to_series()
    dpsi = derivative(psi)
    theta = np.arange(n) * (_TWO_PI / n)
    z = r * np.exp(1j * theta)
    pts = evaluate_many(psi, z)
    ders = evaluate_many(dpsi, z) * (1j * z)
    return pts, ders


def univalent_tail_check(tail: LaurentTail) -> tuple[bool, float]:
    """Necessary condition for univalence: sum n|b_n|^2 <= 1; returns (ok, slack)."""
    terms = np.array([n * abs(c) ** 2 for n, c in enumerate(tail.b)])
    total = _kernels.neumaier_sum(terms) if len(terms) else 0.0
    slack = 1.0 - total
    return slack >= 0.0, slack


def gronwall_area(tail: LaurentTail, r: float) -> AreaReport:
    """Area enclosed by the image of |z| = r under z + sum b_n z^-n.

    value = pi (r^2 - sum_{n>=1} n |b_n|^2 r^{-2n}).  A negative value is
    returned but flagged: the map cannot be univalent on that exterior.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    terms = np.array([n * abs(c) ** 2 * r ** (-2 * n)
                      for n, c in enumerate(tail.b)])
    s = _kernels.neumaier_sum(terms) if len(terms) else 0.0
    value = math.pi * (r * r - s)
    warnings = ()
    if value < 0:
        warnings = ("negative area: map cannot be univalent on |z| > r",)
    return AreaReport(value, "series", max(len(tail.b) - 1, 0), 0.0, warnings)


def annulus_norm(f: FormalSeries, r: float, R: float) -> float:
    """Squared L^2 norm of f over the annulus r < |z| < R.

    Coefficient form pi sum (R^{2n+2} - r^{2n+2})/(n+1) |a_n|^2.  The
    n = -1 term would put a zero denominator under a nonzero numerator
    (its true contribution is logarithmic), so a nonzero coefficient at
    exponent -1 is rejected.  r = 0 with any negative exponent diverges
    and is rejected as well.
    """
    if not 0.0 <= r < R:
        raise ValueError("need 0 <= r < R")
    if f.coefficient(-1) != 0:
        raise ValueError("coefficient at exponent -1 unsupported "
                         "(logarithmic term; formula denominator vanishes)")
    if r == 0.0 and f.has_negative_support:
        raise ValueError("annulus norm diverges: negative exponents with r = 0")
    items = f.items()
    terms = np.empty(len(items))
    for j, (n, c) in enumerate(items):
        terms[j] = (R ** (2 * n + 2) - r ** (2 * n + 2)) / (n + 1) * abs(c) ** 2
    return math.pi * _kernels.neumaier_sum(terms)


class CoefficientBound(NamedTuple):
    k: int
    derivative_magnitude: float  # |f^(k)(0)| = k! |a_k|
    printed_bound: float
    derived_bound: float


def coefficient_bounds_report(f: FormalSeries, r: float, R: float,
                              kmax: int) -> list[CoefficientBound]:
    """Bounds on |f^(k)(0)| from the annulus norm I(f), k = 0..kmax.

    derived_bound comes straight from the norm expansion:
    |a_k|^2 <= I(f) (k+1) / (pi (R^{2k+2} - r^{2k+2})), so
    |f^(k)(0)| <= k! sqrt of that.  printed_bound is an alternative
    constant convention for the same denominators (k = 0, 1 as square
    roots without the pi, k >= 2 multiplying I(f) itself rather than
    its square root); the two normalizations disagree and are reported
    side by side.  Only derived_bound is guaranteed to hold.
    """
    if f.min_exp < 0:
        raise ValueError("coefficient bounds require a Taylor series")
    if not 0.0 <= r < R:
        raise ValueError("need 0 <= r < R")
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    norm = annulus_norm(f, r, R)
    rows = []
    for k in range(kmax + 1):
        ak = abs(f.coefficient(k))
        fk0 = math.factorial(k) * ak
        denom = R ** (2 * k + 2) - r ** (2 * k + 2)
        derived = math.factorial(k) * math.sqrt(norm * (k + 1) / (math.pi * denom))
        if k == 0:
            printed = math.sqrt(norm / (R * R - r * r))
        elif k == 1:
            printed = math.sqrt(2.0 * norm / (R ** 4 - r ** 4))
        else:
            printed = math.factorial(k + 1) * norm / denom
        rows.append(CoefficientBound(k, fk0, printed, derived))
    return rows


def circle_mean_square(f: FormalSeries, r: float) -> float:
    """Mean of |f|^2 on |z| = r: sum |a_n|^2 r^{2n} (Parseval)."""
    if r <= 0:
        raise ValueError("r must be positive")
    items = f.items()
    terms = np.empty(len(items))
    for j, (n, c) in enumerate(items):
        terms[j] = abs(c) ** 2 * r ** (2 * n)
    return _kernels.neumaier_sum(terms)


def radial_area(f: FormalSeries, r: float, orientation: str) -> float:
    """Image area from the radial derivative of the circle mean.

    The derivative identity -(r/4) d/dr of the contour integral of
    |f|^2 gives -pi sum n |a_n|^2 r^{2n}; that sign matches exterior
    maps (Laurent class, area of the complement side).  For interior
    Taylor maps the positively oriented area is +pi sum n |a_n|^2 r^{2n},
    exposed via the orientation tag.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    if orientation not in ("interior_map", "exterior_map"):
        raise ValueError("orientation must be 'interior_map' or 'exterior_map'")
    items = f.items()
    terms = np.empty(len(items))
    for j, (n, c) in enumerate(items):
        terms[j] = n * abs(c) ** 2 * r ** (2 * n)
    s = math.pi * _kernels.neumaier_sum(terms)
    return s if orientation == "interior_map" else -s


def green_boundary_area(f: FormalSeries, r: float, nodes: int = 256) -> AreaReport:
    """Area via Green's formula (1/2i) contour integral of f' conj(f) dz.

    On |z| = r the trapezoid discretization is (pi/n) sum f'(z_k)
    conj(f(z_k)) z_k.  The real part is the area; the imaginary residual
    (zero in exact arithmetic) is reported as est_error.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    if nodes < 16:
        raise ValueError("nodes must be >= 16")
    fp = derivative(f)
    theta = _TWO_PI * np.arange(nodes) / nodes
    z = r * np.exp(1j * theta)
    fv = evaluate_many(f, z)
    fpv = evaluate_many(fp, z)
    vals = fpv * np.conj(fv) * z
    vr = np.ascontiguousarray(vals.real)
    vi = np.ascontiguousarray(vals.imag)
    re, im = _kernels.neumaier_csum(vr, vi)
    scale = math.pi / nodes
    return AreaReport(scale * re, "quadrature", nodes, abs(scale * im))


def double_contour_functional(f: FormalSeries, variant: str,
                              nodes: int = 256) -> float:
    """Two-circle area functional: double integral over (phi, theta) of
    |f(e^{i phi}) - f(e^{i theta})|^2 / |e^{i phi} - e^{i theta}|^2.

    The coefficient variant returns the closed value 4 pi^2 sum p |a_p|^2.
    The quadrature variant evaluates the tensor trapezoid grid, replacing
    the removable diagonal by |f'(e^{i theta})|^2 to keep spectral
    accuracy.
    """
    if f.min_exp < 0:
        raise ValueError("requires Taylor input")
    if variant == "coefficient":
        items = f.items()
        terms = np.empty(len(items))
        for j, (p, c) in enumerate(items):
            terms[j] = p * abs(c) ** 2
        return 4.0 * math.pi ** 2 * _kernels.neumaier_sum(terms)
    if variant != "quadrature":
        raise ValueError("variant must be 'coefficient' or 'quadrature'")
    if nodes < 16:
        raise ValueError("nodes must be >= 16")
    theta = _TWO_PI * np.arange(nodes) / nodes
    w = np.exp(1j * theta)
    fv = evaluate_many(f, w)
    dfv = evaluate_many(derivative(f), w)
    s = _kernels.double_contour_sum(
        np.ascontiguousarray(fv.real), np.ascontiguousarray(fv.imag),
        np.ascontiguousarray(w.real), np.ascontiguousarray(w.imag),
        np.ascontiguousarray(dfv.real), np.ascontiguousarray(dfv.imag))
    return (_TWO_PI / nodes) ** 2 * s


def area_from_functional(im_f: float) -> float:
    """Area = functional / (4 pi)."""
    if im_f < 0:
        raise ValueError("functional value must be >= 0")
    return im_f / (4.0 * math.pi)


def zfprime_area(f: FormalSeries, trunc: int | None = None) -> float:
    """Area-type sum pi sum p |c_p|^2 for z f'(z) = sum c_p z^p.

    The c_p are produced the long way around, exercising the identity
    z f'(z) = f(z) * (z f'(z)/f(z)): the logarithmic-derivative
    coefficients of f are Cauchy-multiplied back onto f rather than
    read off as p a_p.  Requires f = a_1 z + ... with a_1 != 0.  The leading
    pi makes the value equal to the disk integral of |f' + z f''|^2
    (checked against that quadrature oracle in the tests).
    """
    if trunc is None:
        trunc = f.max_exp
    logd = log_derivative_coeffs(f, max(trunc - 1, 0))
    c = cauchy_product(logd, f, trunc)
    items = c.items()
    terms = np.empty(len(items))
    for j, (p, coef) in enumerate(items):
        terms[j] = p * abs(coef) ** 2
    return math.pi * _kernels.neumaier_sum(terms)
