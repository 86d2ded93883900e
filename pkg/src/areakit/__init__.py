"""areakit: series, closed-form and quadrature areas for conformal images.

Every closed-form identity in the library (exterior-map areas, annulus
norms and the coefficient bounds they imply, lemniscate and cardioid
areas, squared-binomial Gamma sums, ellipse orthogonality norms,
point-mass principal values, interpolation convergence rates) is paired
with an independent numerical oracle; `areakit verify --suite all`
re-checks the lot.

Hot numerical kernels run on a compiled extension when available and on
a bit-identical pure-Python twin otherwise; KERNEL_BACKEND names which
one is active, and AREAKIT_BACKEND=c|python forces the choice.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .areas import (AreaReport, CoefficientBound, LaurentTail,
                    annulus_norm, area_from_functional, circle_mean_square,
                    coefficient_bounds_report, double_contour_functional,
                    green_boundary_area, gronwall_area, radial_area,
                    tail_boundary_samples, univalent_tail_check,
                    zfprime_area)
from .chebyshev import (EllipseGeometry, bergman_inner_product,
                        bergman_norm_U, bergman_norm_U_hyperbolic,
                        chebyshev_T, chebyshev_T_derivative,
                        chebyshev_T_series, chebyshev_U, chebyshev_U_series,
                        orthonormal_P, orthonormal_P_series, tprime_area)
from .checks import CheckResult, run_suite
from .interpolation import (AnalyticSampler, NodeSet, chebyshev_nodes,
                            convergence_rate, interpolation_error_curve,
                            inverse_joukowski, joukowski,
                            lagrange_interpolate, nodal_polynomial)
from .quadrature import (QuadratureRule, curve_area_shoelace, disk_integral,
                         gauss_legendre, periodic_trapezoid,
                         principal_value_radial)
from .regions import (CARDIOID_AREA_CLOSED, LemniscateSpec, PointMassSpec,
                      binomial_sq_sum, binomial_sq_weighted_sum,
                      cardioid_area, gamma, lemniscate_area_closed,
                      lemniscate_area_polar, lemniscate_area_series,
                      lemniscate_tail, pointmass_I, pointmass_J,
                      pointmass_sums)
from .series import (BinomialCoefficientSequence, FormalSeries,
                     binomial_coefficients, binomial_expansion,
                     cauchy_product, derivative, evaluate, evaluate_many,
                     hadamard_contour_value, hadamard_product,
                     load_series, log_derivative_coeffs, make_series,
                     series_from_json_dict, series_to_json_dict)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND", "__version__",
    # series
    "FormalSeries", "BinomialCoefficientSequence", "make_series", "evaluate",
    "evaluate_many", "derivative", "cauchy_product", "hadamard_product",
    "hadamard_contour_value", "binomial_coefficients", "binomial_expansion",
    "log_derivative_coeffs", "series_to_json_dict", "series_from_json_dict",
    "load_series",
    # areas
    "AreaReport", "LaurentTail", "CoefficientBound", "gronwall_area",
    "univalent_tail_check", "tail_boundary_samples", "annulus_norm",
    "coefficient_bounds_report", "circle_mean_square", "radial_area",
    "green_boundary_area", "double_contour_functional",
    "area_from_functional", "zfprime_area",
    # regions
    "gamma", "LemniscateSpec", "lemniscate_tail", "lemniscate_area_series",
    "lemniscate_area_closed", "lemniscate_area_polar", "binomial_sq_sum",
    "binomial_sq_weighted_sum", "cardioid_area", "CARDIOID_AREA_CLOSED",
    "PointMassSpec", "pointmass_I", "pointmass_J", "pointmass_sums",
    # chebyshev
    "chebyshev_T", "chebyshev_U", "chebyshev_T_derivative",
    "chebyshev_T_series", "chebyshev_U_series", "EllipseGeometry",
    "bergman_norm_U", "bergman_norm_U_hyperbolic", "orthonormal_P",
    "orthonormal_P_series", "bergman_inner_product", "tprime_area",
    # interpolation
    "NodeSet", "AnalyticSampler", "chebyshev_nodes", "joukowski",
    "inverse_joukowski", "nodal_polynomial", "lagrange_interpolate",
    "interpolation_error_curve", "convergence_rate",
    # quadrature
    "QuadratureRule", "gauss_legendre", "periodic_trapezoid",
    "disk_integral", "curve_area_shoelace", "principal_value_radial",
    # checks
    "CheckResult", "run_suite",
]
