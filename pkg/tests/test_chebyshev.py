"""Chebyshev polynomials and weighted inner products on ellipse interiors."""

import cmath
import math

import numpy as np
import pytest

from areakit import (EllipseGeometry, bergman_inner_product, bergman_norm_U,
                     bergman_norm_U_hyperbolic, chebyshev_T,
                     chebyshev_T_derivative, chebyshev_T_series, chebyshev_U,
                     chebyshev_U_series, derivative, evaluate, orthonormal_P,
                     orthonormal_P_series, tprime_area)

RNG = np.random.default_rng(714285)


# ------------------------------------------------------------ recurrences

@pytest.mark.parametrize("n", [0, 1, 2, 5, 11])
def test_T_matches_trig_form(n):
    for x in RNG.uniform(-0.999, 0.999, size=6):
        want = math.cos(n * math.acos(x))
        assert abs(chebyshev_T(n, x) - want) < 1e-12


@pytest.mark.parametrize("n", [0, 1, 2, 5, 11])
def test_U_matches_trig_form(n):
    for x in RNG.uniform(-0.999, 0.999, size=6):
        t = math.acos(x)
        want = math.sin((n + 1) * t) / math.sin(t)
        assert abs(chebyshev_U(n, x) - want) < 1e-10 * max(1.0, abs(want))


def test_T_and_U_accept_complex_arguments():
    z = 0.7 + 0.4j
    # cos/sin forms continue analytically off the segment
    w = cmath.acos(z)
    assert abs(chebyshev_T(6, z) - cmath.cos(6 * w)) < 1e-11
    assert abs(chebyshev_U(5, z) - cmath.sin(6 * w) / cmath.sin(w)) < 1e-11


@pytest.mark.parametrize("n", [1, 2, 4, 9])
def test_T_derivative_is_n_times_U(n):
    for _ in range(5):
        z = complex(*RNG.uniform(-1.5, 1.5, size=2))
        want = n * chebyshev_U(n - 1, z)
        got = chebyshev_T_derivative(n, z)
        assert abs(got - want) < 1e-11 * max(1.0, abs(want))


def test_T_derivative_degree_zero():
    assert chebyshev_T_derivative(0, 0.3) == 0


@pytest.mark.parametrize("n", [0, 1, 3, 8])
def test_series_forms_match_point_evaluation(n):
    ts = chebyshev_T_series(n)
    us = chebyshev_U_series(n)
    assert ts.max_exp == n and us.max_exp == n
    for _ in range(4):
        z = complex(*RNG.uniform(-1.2, 1.2, size=2))
        assert abs(evaluate(ts, z) - chebyshev_T(n, z)) < 1e-11
        assert abs(evaluate(us, z) - chebyshev_U(n, z)) < 1e-11


def test_degree_validation():
    for fn in (chebyshev_T, chebyshev_U, chebyshev_T_derivative):
        with pytest.raises(ValueError):
            fn(-1, 0.5)
    for fn in (chebyshev_T_series, chebyshev_U_series):
        with pytest.raises(ValueError):
            fn(-2)


# -------------------------------------------------------------- geometry

def test_ellipse_geometry_axes():
    g = EllipseGeometry(0.5)
    assert abs(g.a - math.cosh(0.5)) < 1e-15
    assert abs(g.b - math.sinh(0.5)) < 1e-15
    assert abs(g.rho - (g.a + g.b) ** 2) < 1e-14
    with pytest.raises(ValueError):
        EllipseGeometry(0.0)
    with pytest.raises(ValueError):
        EllipseGeometry(-1.0)


@pytest.mark.parametrize("n", [0, 1, 2, 6])
def test_norm_closed_forms_agree(n):
    g = EllipseGeometry(math.log(2.0))
    power = bergman_norm_U(n, g)
    hyper = bergman_norm_U_hyperbolic(n, g)
    assert abs(power - hyper) < 1e-13 * power


def test_norm_U0_is_weighted_ellipse_area():
    # ||U_0||^2 = area-type value pi (rho - 1/rho)/4
    g = EllipseGeometry(0.3)
    rho = g.rho
    assert abs(bergman_norm_U(0, g) - math.pi * (rho - 1.0 / rho) / 4.0) \
        < 1e-15


# --------------------------------------------------------- inner product

def test_inner_product_diagonal_matches_closed_form():
    g = EllipseGeometry(0.4)
    for n in range(5):
        u = chebyshev_U_series(n)
        got = bergman_inner_product(u, u, g)
        want = bergman_norm_U(n, g)
        assert abs(got.imag) < 1e-12 * want
        assert abs(got.real - want) < 1e-9 * want


def test_inner_product_off_diagonal_vanishes():
    g = EllipseGeometry(0.7)
    scale = math.sqrt(bergman_norm_U(2, g) * bergman_norm_U(5, g))
    got = bergman_inner_product(chebyshev_U_series(2),
                                chebyshev_U_series(5), g)
    assert abs(got) < 1e-10 * scale


def test_inner_product_conjugate_linear_in_first_slot():
    g = EllipseGeometry(0.5)
    u1, u3 = chebyshev_U_series(1), chebyshev_U_series(3)
    lam = 0.6 + 0.8j
    lhs = bergman_inner_product(u1.scaled(lam), u3, g)
    rhs = lam.conjugate() * bergman_inner_product(u1, u3, g)
    assert abs(lhs - rhs) < 1e-12
    # hermitian symmetry
    fwd = bergman_inner_product(u1.scaled(lam), u3, g)
    bwd = bergman_inner_product(u3, u1.scaled(lam), g)
    assert abs(fwd - bwd.conjugate()) < 1e-12


def test_inner_product_order_floor():
    g = EllipseGeometry(0.5)
    u = chebyshev_U_series(1)
    with pytest.raises(ValueError):
        bergman_inner_product(u, u, g, order=4)


def test_orthonormal_P_unit_norm():
    g = EllipseGeometry(math.log(2.0))
    for n in range(4):
        p = orthonormal_P_series(n, g)
        got = bergman_inner_product(p, p, g)
        assert abs(got - 1.0) < 1e-9
        z = 0.3 + 0.2j
        assert abs(orthonormal_P(n, g, z) - evaluate(p, z)) < 1e-12


# ------------------------------------------------------------- |T'|^2

def test_tprime_area_closed_form():
    g = EllipseGeometry(0.5)
    assert tprime_area(0, g) == 0.0
    assert abs(tprime_area(1, g) - math.pi * g.a * g.b) < 1e-14
    for n in range(1, 7):
        # n T_n' = n^2 U_{n-1}, so the integral is n^2 ||U_{n-1}||^2
        want = n * n * bergman_norm_U(n - 1, g)
        assert abs(tprime_area(n, g) - want) < 1e-12 * max(1.0, want)


def test_tprime_area_matches_quadrature():
    g = EllipseGeometry(0.5)
    for n in range(1, 7):
        dt = derivative(chebyshev_T_series(n))
        got = bergman_inner_product(dt, dt, g).real
        assert abs(got - tprime_area(n, g)) < 1e-9 * max(1.0, got)
