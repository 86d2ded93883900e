"""Acceptance gate: twelve numbered criteria, one test and one line each.

Each test computes its residuals, prints a single
``criterion NN PASS/FAIL`` line (visible under ``pytest -s``), and then
asserts.  Tolerances are hard requirements, not targets.
"""

import math

import numpy as np

from areakit import (EllipseGeometry, LaurentTail, PointMassSpec,
                     area_from_functional, bergman_inner_product,
                     bergman_norm_U, binomial_sq_sum, binomial_sq_weighted_sum,
                     cardioid_area, chebyshev_T_series, chebyshev_U_series,
                     circle_mean_square, coefficient_bounds_report,
                     convergence_rate, curve_area_shoelace, derivative,
                     disk_integral, double_contour_functional, evaluate,
                     green_boundary_area, gronwall_area,
                     interpolation_error_curve, lemniscate_area_closed,
                     lemniscate_area_polar, lemniscate_area_series,
                     make_series, periodic_trapezoid, pointmass_I, pointmass_J,
                     principal_value_radial, radial_area,
                     tail_boundary_samples, tprime_area, zfprime_area)


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num:02d} {'PASS' if ok else 'FAIL'}: {detail}")


def _random_laurent(rng, max_abs_exp=8):
    exps = rng.choice(np.arange(-max_abs_exp, max_abs_exp + 1), size=5,
                      replace=False)
    coeffs = [(int(e), complex(x, y) * 2.0 ** -abs(int(e))) for e, (x, y) in
              zip(exps, rng.standard_normal((len(exps), 2)))]
    lo, hi = min(e for e, _ in coeffs), max(e for e, _ in coeffs)
    return make_series(coeffs, min(lo, 0), max(hi, 0))


def _random_taylor(rng, max_degree=8, zero_constant=True, scale=0.5):
    lo = 1 if zero_constant else 0
    coeffs = [(e, complex(x, y) * scale) for e, (x, y) in
              zip(range(lo, max_degree + 1),
                  rng.standard_normal((max_degree + 1 - lo, 2)))]
    return make_series(coeffs, 0, max_degree)


def test_criterion_01_exterior_ellipse_area():
    tail = LaurentTail((0.0, 1.0))
    closed = 15.0 * math.pi / 4.0
    got = gronwall_area(tail, 2.0).value
    r_closed = abs(got - closed)
    pts, ders = tail_boundary_samples(tail, 2.0, 512)
    quad = curve_area_shoelace(pts, ders)
    r_quad = abs(got - quad) / abs(quad)
    ok = r_closed < 1e-12 and r_quad < 1e-8
    _report(1, ok, f"|A - 15pi/4| = {r_closed:.3e} (tol 1e-12), "
                   f"rel dev vs 512-sample boundary quadrature = "
                   f"{r_quad:.3e} (tol 1e-8)")
    assert ok


def test_criterion_02_lemniscate_triple_agreement():
    worst = 0.0
    for m in range(1, 9):
        vals = [lemniscate_area_series(m, 200).value,
                lemniscate_area_closed(m).value,
                lemniscate_area_polar(m).value]
        for i in range(3):
            for j in range(i + 1, 3):
                worst = max(worst, abs(vals[i] - vals[j]))
    r1 = abs(lemniscate_area_closed(1).value - math.pi)
    r2 = abs(lemniscate_area_closed(2).value - 2.0)
    ok = worst < 1e-5 and r1 < 1e-10 and r2 < 1e-6
    _report(2, ok, f"worst pairwise dev m=1..8 = {worst:.3e} (tol 1e-5), "
                   f"|A(1) - pi| = {r1:.3e} (tol 1e-10), "
                   f"|A(2) - 2| = {r2:.3e} (tol 1e-6)")
    assert ok


def test_criterion_03_binomial_square_sum_identities():
    worst = 0.0
    for alpha in (1.0, 0.5, 1.0 / 3.0, 0.25, 0.2):
        n1, c1 = binomial_sq_sum(alpha)
        n2, c2 = binomial_sq_weighted_sum(alpha)
        worst = max(worst, abs(n1 - c1), abs(n2 - c2))
    ok = worst < 1e-6
    _report(3, ok, f"worst |numeric - closed| over both identities, "
                   f"alpha in {{1, 1/2, 1/3, 1/4, 1/5}} = {worst:.3e} "
                   f"(tol 1e-6)")
    assert ok


def test_criterion_04_circle_mean_square_parseval():
    rng = np.random.default_rng(40404)
    worst = 0.0
    for _ in range(50):
        f = _random_laurent(rng)
        for r in (0.5, 1.0, 2.0):
            lhs = circle_mean_square(f, r)
            rhs = periodic_trapezoid(
                lambda t: abs(evaluate(f, r * np.exp(1j * t))) ** 2,
                256).real / (2.0 * math.pi)
            worst = max(worst, abs(lhs - rhs))
    ok = worst < 1e-10
    _report(4, ok, f"worst |series - trapezoid| over 50 random Laurent "
                   f"polynomials x r in {{0.5, 1, 2}} = {worst:.3e} "
                   f"(tol 1e-10)")
    assert ok


def test_criterion_05_area_functional_consistency():
    rng = np.random.default_rng(50505)
    worst = 0.0
    for _ in range(50):
        f = _random_taylor(rng)
        vals = [green_boundary_area(f, 1.0).value,
                area_from_functional(double_contour_functional(
                    f, "coefficient")),
                area_from_functional(double_contour_functional(
                    f, "quadrature")),
                radial_area(f, 1.0, "interior_map")]
        for i in range(4):
            for j in range(i + 1, 4):
                worst = max(worst, abs(vals[i] - vals[j]))
    ok = worst < 1e-8
    _report(5, ok, f"worst pairwise dev of 4 area paths over 50 random "
                   f"vanishing-constant polynomials = {worst:.3e} (tol 1e-8)")
    assert ok


def test_criterion_06_weighted_gram_orthogonality():
    worst_diag = worst_off = worst_eye = 0.0
    for c in (0.3, math.log(2.0), 1.0):
        g = EllipseGeometry(c)
        series = [chebyshev_U_series(n) for n in range(7)]
        norms = [bergman_norm_U(n, g) for n in range(7)]
        for i in range(7):
            for j in range(7):
                val = bergman_inner_product(series[i], series[j], g)
                if i == j:
                    worst_diag = max(worst_diag,
                                     abs(val.real - norms[i]) / norms[i],
                                     abs(val.imag) / norms[i])
                else:
                    worst_off = max(worst_off, abs(val) /
                                    math.sqrt(norms[i] * norms[j]))
        from areakit import orthonormal_P_series
        ps = [orthonormal_P_series(n, g) for n in range(7)]
        for i in range(7):
            for j in range(7):
                val = bergman_inner_product(ps[i], ps[j], g)
                worst_eye = max(worst_eye, abs(val - (1.0 if i == j else 0.0)))
    ok = worst_diag < 1e-7 and worst_off < 1e-7 and worst_eye < 1e-7
    _report(6, ok, f"deg 0..6, c in {{0.3, ln 2, 1.0}}: diag rel dev = "
                   f"{worst_diag:.3e}, normalized offdiag = {worst_off:.3e}, "
                   f"orthonormal gram vs identity = {worst_eye:.3e} "
                   f"(tol 1e-7 each)")
    assert ok


def test_criterion_07_tprime_integral_closed_form():
    g = EllipseGeometry(0.5)
    worst = 0.0
    for n in range(1, 7):
        dt = derivative(chebyshev_T_series(n))
        quad = bergman_inner_product(dt, dt, g).real
        closed = tprime_area(n, g)
        worst = max(worst, abs(quad - closed) / closed)
    r1 = abs(tprime_area(1, g) - math.pi * g.a * g.b)
    ok = worst < 1e-7 and r1 < 1e-12
    _report(7, ok, f"n=1..6 rel dev closed vs quadrature = {worst:.3e} "
                   f"(tol 1e-7), |n=1 case - pi a b| = {r1:.3e} (tol 1e-12)")
    assert ok


def test_criterion_08_interpolation_rates_and_exactness():
    pts = np.linspace(-0.95, 0.95, 41)
    devs = []
    for f, logR in ((lambda z: 1.0 / (z - 2.0),
                     math.log(2.0 + math.sqrt(3.0))),
                    (lambda z: 1.0 / (1.0 + z * z),
                     math.log(1.0 + math.sqrt(2.0)))):
        curve = interpolation_error_curve(f, range(2, 25), pts)
        devs.append(abs(convergence_rate(curve) - logR) / logR)
    from areakit import lagrange_interpolate
    worst_mono = 0.0
    for k in range(6):
        mono = lambda z, k=k: z ** k
        for z in (-0.9, -0.3, 0.0, 0.41, 0.88):
            worst_mono = max(worst_mono,
                             abs(lagrange_interpolate(mono, 6, z) - z ** k))
    ok = max(devs) < 0.05 and worst_mono < 1e-11
    _report(8, ok, f"rate rel devs (pole at 2: {devs[0]:.4f}, poles at +-i: "
                   f"{devs[1]:.4f}; tol 0.05), monomial reproduction dev = "
                   f"{worst_mono:.3e} (tol 1e-11)")
    assert ok


def test_criterion_09_pointmass_principal_values():
    rng = np.random.default_rng(90909)
    worst_pv = worst_id = 0.0
    for _ in range(20):
        s = float(rng.uniform(0.2, 0.8))
        a = float(rng.uniform(0.0, 2.0 * math.pi))
        p = s * complex(math.cos(a), math.sin(a))
        s2 = s * s
        i_cl, j_cl = pointmass_I(p), pointmass_J(p)
        i_pv = principal_value_radial(
            lambda r: 2.0 * r / (r * r - s2), s)
        j_pv = principal_value_radial(
            lambda r: r * (r * r + 3.0 * s2) / (r * r - s2), s)
        worst_pv = max(worst_pv, abs(i_cl - i_pv), abs(j_cl - j_pv))
        worst_id = max(worst_id, abs(j_cl - (0.5 + 2.0 * s2 * i_cl)))
    ok = worst_pv < 1e-6 and worst_id < 1e-12
    _report(9, ok, f"worst closed vs principal value over 20 random points "
                   f"= {worst_pv:.3e} (tol 1e-6), worst J identity residual "
                   f"= {worst_id:.3e} (tol 1e-12)")
    assert ok


def test_criterion_10_cardioid_area():
    r = abs(cardioid_area().value - 3.0 * math.pi / 8.0)
    ok = r < 1e-12
    _report(10, ok, f"|quadrature - 3pi/8| = {r:.3e} (tol 1e-12)")
    assert ok


def test_criterion_11_derivative_bounds_from_norm():
    rng = np.random.default_rng(111111)
    holds = True
    worst_eq = 0.0
    for _ in range(100):
        f = _random_taylor(rng, max_degree=6, zero_constant=False)
        r = float(rng.uniform(0.0, 0.5))
        R = float(rng.uniform(1.0, 2.0))
        for b in coefficient_bounds_report(f, r, R, 6):
            if b.derivative_magnitude > b.derived_bound * (1 + 1e-12):
                holds = False
    for k in range(7):
        f = make_series([(k, 0.8 - 0.1j)], 0, k)
        b = coefficient_bounds_report(f, 0.25, 1.75, k)[k]
        worst_eq = max(worst_eq,
                       abs(b.derived_bound - b.derivative_magnitude)
                       / b.derived_bound)
    ok = holds and worst_eq < 1e-10
    _report(11, ok, f"bounds hold on 100 random series x random annuli: "
                    f"{holds}, single-term equality rel dev = {worst_eq:.3e} "
                    f"(tol 1e-10)")
    assert ok


def test_criterion_12_zfprime_series_vs_disk_quadrature():
    rng = np.random.default_rng(121212)
    worst = 0.0
    for _ in range(20):
        f = _random_taylor(rng, max_degree=6)
        if abs(f.coefficient(1)) < 0.05:
            f = f + make_series([(1, 1.0)], 0, 1)
        series_val = zfprime_area(f)
        zf1 = make_series([(e, e * c) for e, c in f.items()], 0, f.max_exp)
        integrand_series = derivative(zf1)
        quad = disk_integral(
            lambda z: abs(evaluate(integrand_series, z)) ** 2, 0.0, 1.0)
        worst = max(worst, abs(series_val - quad) / quad)
    ok = worst < 1e-7
    _report(12, ok, f"worst rel dev series vs unit-disk quadrature over 20 "
                    f"random polynomials = {worst:.3e} (tol 1e-7)")
    assert ok
