"""Interpolation at the zeros of U_n and its geometric convergence rate.

The nodes z_k = cos(k pi/(n+1)) are the roots of the second-kind
Chebyshev polynomial; the nodal polynomial omega_n(z) = prod (z - z_k)
equals U_n(z)/2^n and has a closed Joukowski form through w = z +
sqrt(z^2 - 1).  For f analytic inside the ellipse E_R (image of |w| = R
under z = (w + 1/w)/2, semi-axes (R +- 1/R)/2), the Lagrange interpolant
at these nodes converges like 1/R^n; fitting the error curve recovers
log R.

Note the halved axis convention: this module's ellipses are images of
(w + 1/w)/2, while the exterior-map machinery elsewhere uses z + 1/z
with doubled axes.  The two conventions are never mixed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .chebyshev import chebyshev_U


@dataclass(frozen=True)
class NodeSet:
    """The n roots of U_n: cos(k pi/(n+1)), k = 1..n, strictly decreasing."""

    n: int
    nodes: tuple[float, ...]


@dataclass(frozen=True)
class AnalyticSampler:
    """A function plus caller-supplied analyticity metadata.

    singularity_radius is the largest R such that f is analytic on the
    closed region bounded by E_R; it is external knowledge about f, not
    inferred.
    """

    evaluator: Callable[[complex], complex]
    singularity_radius: float

    def __post_init__(self):
        if not self.singularity_radius > 1.0:
            raise ValueError("singularity_radius must exceed 1")

    def __call__(self, z: complex) -> complex:
        return self.evaluator(z)


def chebyshev_nodes(n: int) -> NodeSet:
    """Roots of U_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return NodeSet(n, tuple(math.cos(k * math.pi / (n + 1))
                            for k in range(1, n + 1)))


def joukowski(w: complex) -> complex:
    """z = (w + 1/w)/2; maps |w| = r > 1 onto the ellipse with semi-axes (r +- 1/r)/2."""
    w = complex(w)
    if w == 0:
        raise ValueError("w must be nonzero")
    return 0.5 * (w + 1.0 / w)


def inverse_joukowski(z: complex) -> complex:
    """The root of w^2 - 2zw + 1 = 0 with |w| >= 1.

    The two roots multiply to 1, so one always has modulus >= 1; ties
    (both on the unit circle, i.e. z on the segment [-1, 1]) resolve to
    the root with nonnegative imaginary part.
    """
    z = complex(z)
    sq = cmath.sqrt(z * z - 1.0)
    w1 = z + sq
    w2 = z - sq
    a1, a2 = abs(w1), abs(w2)
    if abs(a1 - a2) <= 1e-12 * max(a1, a2):
        return w1 if w1.imag >= 0 else w2
    return w1 if a1 > a2 else w2


def _u_value_and_derivative(n: int, z: complex) -> tuple[complex, complex]:
    """(U_n(z), U_n'(z)) from the recurrence and its derivative in lockstep."""
    if n == 0:
        return 1.0 + 0j, 0j
    ukm1, uk = 1.0 + 0j, 2.0 * z
    dkm1, dk = 0j, 2.0 + 0j
    for _ in range(n - 1):
        ukm1, uk, dkm1, dk = uk, 2.0 * z * uk - ukm1, dk, 2.0 * uk + 2.0 * z * dk - dkm1
    return uk, dk


def nodal_polynomial(n: int, z: complex, form: str = "chebyshev") -> complex:
    """omega_n(z) = prod over nodes of (z - z_k), in three equivalent forms.

    product: the literal product over the node set.
    chebyshev: U_n(z)/2^n.
    joukowski: (1/2^n)(w^{n+1} - w^{-n-1})/(w - w^{-1}) with w the exterior
    branch of the inverse Joukowski map; near the branch points w = +-1
    (where this is a removable 0/0) it falls back to the chebyshev form.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    z = complex(z)
    if form == "product":
        acc = 1.0 + 0j
        for zk in chebyshev_nodes(n).nodes:
            acc *= (z - zk)
        return acc
    if form == "chebyshev":
        return chebyshev_U(n, z) / 2.0 ** n
    if form == "joukowski":
        w = inverse_joukowski(z)
        denom = w - 1.0 / w
        if abs(denom) < 1e-8:
            return chebyshev_U(n, z) / 2.0 ** n
        num = w ** (n + 1) - w ** (-(n + 1))
        return num / denom / 2.0 ** n
    raise ValueError("form must be 'product', 'joukowski' or 'chebyshev'")


def _sampler_call(f) -> Callable[[complex], complex]:
    return f.evaluator if isinstance(f, AnalyticSampler) else f


def _interpolate_prepared(nodes: Sequence[float], samples: Sequence[complex],
                          uprimes: Sequence[complex], n: int,
                          z: complex) -> complex:
    # omega/omega' = U_n/U_n' since the 2^n normalizations cancel
    for k, zk in enumerate(nodes):
        if abs(z - zk) < 1e-14:
            return samples[k]
    un = chebyshev_U(n, z)
    acc = 0j
    for k, zk in enumerate(nodes):
        acc += un / ((z - zk) * uprimes[k]) * samples[k]
    return acc


def lagrange_interpolate(f: AnalyticSampler | Callable[[complex], complex],
                         n: int, z: complex) -> complex:
    """Degree-(n-1) Lagrange interpolant of f at the roots of U_n.

    Evaluated in the nodal form sum omega_n(z)/((z - z_k) omega_n'(z_k))
    f(z_k) with omega_n' computed analytically from the U-recurrence
    derivative.  Within 1e-14 of a node the sample itself is returned.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    fn = _sampler_call(f)
    nodes = chebyshev_nodes(n).nodes
    samples = [complex(fn(zk)) for zk in nodes]
    uprimes = [_u_value_and_derivative(n, zk)[1] for zk in nodes]
    return _interpolate_prepared(nodes, samples, uprimes, n, complex(z))


def interpolation_error_curve(f: AnalyticSampler | Callable[[complex], complex],
                              n_range: Iterable[int],
                              eval_points: Sequence[float]) -> list[tuple[int, float]]:
    """Max interpolation error over the evaluation points, for each n."""
    pts = [float(x) for x in eval_points]
    if any(not -1.0 <= x <= 1.0 for x in pts):
        raise ValueError("evaluation points must lie in [-1, 1]")
    fn = _sampler_call(f)
    exact = [complex(fn(x)) for x in pts]
    curve = []
    for n in n_range:
        nodes = chebyshev_nodes(n).nodes
        samples = [complex(fn(zk)) for zk in nodes]
        uprimes = [_u_value_and_derivative(n, zk)[1] for zk in nodes]
        err = max(abs(exact[j] - _interpolate_prepared(nodes, samples, uprimes,
                                                       n, complex(x)))
                  for j, x in enumerate(pts))
        curve.append((int(n), err))
    return curve


def convergence_rate(error_curve: Sequence[tuple[int, float]]) -> float:
    """Fitted log R: minus the least-squares slope of log(error) vs n.

    Points at the precision floor (error < 1e-13) are discarded; fewer
    than 4 usable points is an error.
    """
    usable = [(n, e) for n, e in error_curve if e > 1e-13]
    if len(usable) < 4:
        raise ValueError("insufficient data: need at least 4 points above "
                         "the 1e-13 precision floor")
    xs = [float(n) for n, _ in usable]
    ys = [math.log(e) for _, e in usable]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    return -sxy / sxx
