"""Quadrature oracles: Gauss-Legendre, trapezoid, disk, shoelace, PV."""

import math

import numpy as np
import pytest

from areakit import (curve_area_shoelace, disk_integral, gauss_legendre,
                     periodic_trapezoid, principal_value_radial)

RNG = np.random.default_rng(31415)


def test_gauss_legendre_two_point():
    rule = gauss_legendre(2)
    assert np.allclose(rule.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)],
                       atol=1e-15)
    assert np.allclose(rule.weights, [1.0, 1.0], atol=1e-15)


@pytest.mark.parametrize("n", [1, 2, 5, 16, 64])
def test_gauss_legendre_polynomial_exactness(n):
    # exact through degree 2n-1
    rule = gauss_legendre(n)
    for d in range(2 * n):
        got = float(np.dot(rule.weights, rule.nodes ** d))
        want = 0.0 if d % 2 else 2.0 / (d + 1)
        assert abs(got - want) < 5e-14 * (d + 1)


def test_gauss_legendre_affine_map():
    rule = gauss_legendre(8, 2.0, 5.0)
    assert abs(float(np.sum(rule.weights)) - 3.0) < 1e-13
    got = float(np.dot(rule.weights, rule.nodes ** 2))
    assert abs(got - (125.0 - 8.0) / 3.0) < 1e-12


def test_gauss_legendre_validation():
    with pytest.raises(ValueError):
        gauss_legendre(0)
    with pytest.raises(ValueError):
        gauss_legendre(4, 1.0, 1.0)


def test_gauss_legendre_rules_are_frozen():
    rule = gauss_legendre(8)
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0


def test_periodic_trapezoid_fourier_orthogonality():
    # integral of e^{ik theta} over a period vanishes unless k = 0
    for k in (0, 1, 5, -3):
        got = periodic_trapezoid(lambda t: np.exp(1j * k * t), 64)
        want = 2.0 * math.pi if k == 0 else 0.0
        assert abs(got - want) < 1e-13


def test_periodic_trapezoid_validation():
    with pytest.raises(ValueError):
        periodic_trapezoid(lambda t: 1.0, 3)


def test_disk_integral_area_and_moments():
    assert abs(disk_integral(lambda z: 1.0, 0.0, 1.0) - math.pi) < 1e-12
    # annulus area
    got = disk_integral(lambda z: 1.0, 0.5, 1.5)
    assert abs(got - math.pi * (1.5 ** 2 - 0.5 ** 2)) < 1e-12
    # integral of |z|^2 over unit disk = pi/2
    got = disk_integral(lambda z: abs(z) ** 2, 0.0, 1.0)
    assert abs(got - math.pi / 2.0) < 1e-12


def test_disk_integral_validation():
    with pytest.raises(ValueError):
        disk_integral(lambda z: 1.0, 1.0, 0.5)
    with pytest.raises(ValueError):
        disk_integral(lambda z: 1.0, -0.1, 1.0)


def test_shoelace_polygon_square():
    pts = [1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j]
    assert abs(curve_area_shoelace(pts) - 4.0) < 1e-15
    # reversed orientation flips the sign
    assert abs(curve_area_shoelace(pts[::-1]) + 4.0) < 1e-15


def test_shoelace_polygon_converges_quadratically():
    errs = []
    for n in (64, 128, 256):
        theta = np.arange(n) * (2.0 * math.pi / n)
        errs.append(abs(curve_area_shoelace(np.exp(1j * theta)) - math.pi))
    assert errs[1] < errs[0] / 3.5
    assert errs[2] < errs[1] / 3.5


def test_shoelace_spectral_is_exact_on_smooth_curves():
    n = 64
    theta = np.arange(n) * (2.0 * math.pi / n)
    w = np.exp(1j * theta)
    pts = 2.0 * w + 0.25 / w          # ellipse, area pi(4 - 1/16)
    ders = 1j * w * (2.0 - 0.25 / w ** 2)
    got = curve_area_shoelace(pts, ders)
    assert abs(got - math.pi * (4.0 - 0.0625)) < 1e-12


def test_shoelace_validation():
    with pytest.raises(ValueError):
        curve_area_shoelace([1.0, 2.0])
    with pytest.raises(ValueError):
        curve_area_shoelace([1, 1j, -1], [1j])


@pytest.mark.parametrize("s", [0.3, 0.5, 0.77])
def test_pv_odd_pole_is_clean(s):
    # g = 1/(r-s): PV = log((1-s)/s)
    got = principal_value_radial(lambda r: 1.0 / (r - s), s)
    assert abs(got - math.log((1.0 - s) / s)) < 1e-8


def test_pv_with_smooth_numerator():
    s = 0.4
    s2 = s * s
    got = principal_value_radial(lambda r: 2.0 * r / (r * r - s2), s)
    assert abs(got - math.log((1.0 - s2) / s2)) < 1e-8


def test_pv_divergence_detected():
    # second-order pole has no principal value
    with pytest.raises(RuntimeError):
        principal_value_radial(lambda r: 1.0 / (r - 0.5) ** 2, 0.5)


def test_pv_validation():
    with pytest.raises(ValueError):
        principal_value_radial(lambda r: 1.0, 0.0)
    with pytest.raises(ValueError):
        principal_value_radial(lambda r: 1.0, 1.5)
