"""Command-line front end: areas, Gram matrices, error curves, checks.

Subcommands
    area    region areas by every available method plus their deviations
    ortho   Bergman Gram matrix of U_0..U_nmax on an ellipse
    interp  interpolation error curve and fitted convergence rate
    verify  run a named self-check suite

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
parse error.  Identical invocations produce byte-identical output.  CSV
uses '.' decimals and 17 significant digits.  If --output is a relative
path and AREAKIT_OUTPUT_DIR is set, the file lands in that directory.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .areas import (AreaReport, LaurentTail, gronwall_area,
                    tail_boundary_samples)
from .chebyshev import (EllipseGeometry, bergman_inner_product,
                        bergman_norm_U, chebyshev_U_series,
                        orthonormal_P_series)
from .checks import run_suite
from .interpolation import (AnalyticSampler, convergence_rate,
                            interpolation_error_curve)
from .quadrature import curve_area_shoelace
from .regions import (CARDIOID_AREA_CLOSED, cardioid_area,
                      lemniscate_area_closed, lemniscate_area_polar,
                      lemniscate_area_series)
from .series import load_series


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: every knob, defaults included."""

    command: str
    params: dict = field(default_factory=dict)
    output_format: str = "csv"
    output_path: str | None = None


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output_path is None:
        sys.stdout.write(text)
        return
    path = cfg.output_path
    if not os.path.isabs(path):
        outdir = os.environ.get("AREAKIT_OUTPUT_DIR")
        if outdir:
            path = os.path.join(outdir, path)
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _usage_error(msg: str) -> int:
    print(f"areakit: error: {msg}", file=sys.stderr)
    return 2


def _parse_error(msg: str) -> int:
    print(f"areakit: parse error: {msg}", file=sys.stderr)
    return 3


def _json_doc(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------- area

def _tail_from_file(path: str) -> LaurentTail:
    """Read an exterior map z + sum b_n z^-n from a series JSON file."""
    s = load_series(path)
    if s.coefficient(1) != 1:
        raise ValueError("tail file must have coefficient 1 at exponent 1")
    bad = [e for e, _ in s.items() if e > 1]
    if bad:
        raise ValueError(f"exponents above 1 not allowed in a tail: {bad}")
    depth = max(-s.min_exp, 0)
    b = [s.coefficient(-n) for n in range(depth + 1)]
    return LaurentTail(b)


def _shoelace_report(tail: LaurentTail, r: float, n: int = 512) -> AreaReport:
    pts, ders = tail_boundary_samples(tail, r, n)
    value = curve_area_shoelace(pts, ders)
    pts2, ders2 = tail_boundary_samples(tail, r, n // 2)
    coarse = curve_area_shoelace(pts2, ders2)
    return AreaReport(value, "quadrature", n, abs(value - coarse))


def _area_reports(region: str, r: float, m: int, trunc: int,
                  tail: LaurentTail | None,
                  oracle: bool) -> list[AreaReport]:
    if region == "circle":
        t = LaurentTail(())
        reports = [gronwall_area(t, r),
                   AreaReport(math.pi * r * r, "closed_form", 0, 0.0)]
        if oracle:
            reports.append(_shoelace_report(t, r))
        return reports
    if region == "ellipse":
        t = LaurentTail((0.0, 1.0))
        closed = math.pi * (r * r - 1.0 / (r * r))
        reports = [gronwall_area(t, r),
                   AreaReport(closed, "closed_form", 0, 0.0)]
        if oracle:
            reports.append(_shoelace_report(t, r))
        return reports
    if region == "cardioid":
        reports = [AreaReport(CARDIOID_AREA_CLOSED, "closed_form", 0, 0.0)]
        if oracle:
            reports.append(cardioid_area())
        return reports
    if region == "lemniscate":
        reports = [lemniscate_area_series(m, trunc), lemniscate_area_closed(m)]
        if oracle:
            reports.append(lemniscate_area_polar(m))
        return reports
    if region == "custom-tail":
        reports = [gronwall_area(tail, r)]
        if oracle:
            reports.append(_shoelace_report(tail, r))
        return reports
    raise AssertionError(region)


def _cmd_area(args) -> int:
    region = args.region
    if args.r <= 0:
        return _usage_error("--r must be positive")
    if args.m < 1:
        return _usage_error("--m must be >= 1")
    if args.trunc < 1:
        return _usage_error("--trunc must be >= 1")
    tail = None
    if region == "custom-tail":
        if args.tail_file is None:
            return _usage_error("--region custom-tail requires --tail-file")
        try:
            tail = _tail_from_file(args.tail_file)
        except (OSError, ValueError) as exc:
            return _parse_error(f"cannot read tail file: {exc}")

    params: dict = {}
    if region in ("circle", "ellipse", "custom-tail"):
        params["r"] = args.r
    if region == "lemniscate":
        params["m"] = args.m
        params["trunc"] = args.trunc
        if args.oracle:
            params["polar_order"] = 16
    if region == "custom-tail":
        params["tail_file"] = args.tail_file
    if region == "cardioid" and args.oracle:
        params["cardioid_order"] = 64
    if args.oracle and region in ("circle", "ellipse", "custom-tail"):
        params["boundary_samples"] = 512

    reports = _area_reports(region, args.r, args.m, args.trunc, tail,
                            args.oracle)
    deviations = {}
    for i in range(len(reports)):
        for j in range(i + 1, len(reports)):
            key = f"{reports[i].method}-vs-{reports[j].method}"
            deviations[key] = abs(reports[i].value - reports[j].value)

    cfg = RunConfig("area", params, args.format, args.output)
    if cfg.output_format == "json":
        doc = {"command": "area", "region": region, "params": params,
               "reports": [rep.to_json_dict() for rep in reports],
               "deviations": deviations}
        _emit(_json_doc(doc), cfg)
        return 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["region", "params", "method", "value", "est_error"])
    pstr = ";".join(f"{k}={_fmt(v) if isinstance(v, float) else v}"
                    for k, v in params.items())
    for rep in reports:
        w.writerow([region, pstr, rep.method, _fmt(rep.value),
                    _fmt(rep.est_error)])
    for key, dev in deviations.items():
        w.writerow([region, pstr, f"deviation:{key}", _fmt(dev), ""])
    _emit(buf.getvalue(), cfg)
    return 0


# --------------------------------------------------------------- ortho

def _cmd_ortho(args) -> int:
    if args.c <= 0:
        return _usage_error("--c must be positive")
    if not 0 <= args.nmax <= 12:
        return _usage_error("--nmax must lie in 0..12")
    if args.order < 8:
        return _usage_error("--order must be >= 8")
    geom = EllipseGeometry(args.c)
    nmax = args.nmax
    u = [chebyshev_U_series(n) for n in range(nmax + 1)]
    gram = [[bergman_inner_product(u[i], u[j], geom, args.order)
             for j in range(nmax + 1)] for i in range(nmax + 1)]
    norms = [bergman_norm_U(n, geom) for n in range(nmax + 1)]
    max_offdiag = 0.0
    max_diag_rel = 0.0
    max_imag = 0.0
    for i in range(nmax + 1):
        for j in range(nmax + 1):
            max_imag = max(max_imag, abs(gram[i][j].imag))
            if i == j:
                max_diag_rel = max(max_diag_rel,
                                   abs(gram[i][i].real - norms[i]) / norms[i])
            else:
                max_offdiag = max(max_offdiag, abs(gram[i][j])
                                  / math.sqrt(norms[i] * norms[j]))
    p = [orthonormal_P_series(n, geom) for n in range(nmax + 1)]
    p_dev = 0.0
    for i in range(nmax + 1):
        for j in range(nmax + 1):
            g = bergman_inner_product(p[i], p[j], geom, args.order)
            p_dev = max(p_dev, abs(g - (1.0 if i == j else 0.0)))
    summary = {"c": args.c, "nmax": nmax, "quad_order": args.order,
               "max_offdiag_rel": max_offdiag,
               "max_diag_rel_error": max_diag_rel,
               "max_imag_residual": max_imag,
               "p_gram_max_dev_from_identity": p_dev}

    cfg = RunConfig("ortho", dict(summary), args.format, args.output)
    if cfg.output_format == "json":
        doc = {"command": "ortho",
               "params": {"c": args.c, "nmax": nmax,
                          "quad_order": args.order},
               "gram": [[gram[i][j].real for j in range(nmax + 1)]
                        for i in range(nmax + 1)],
               "closed_form_diagonal": norms,
               "summary": summary}
        _emit(_json_doc(doc), cfg)
        return 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for i in range(nmax + 1):
        w.writerow([_fmt(gram[i][j].real) for j in range(nmax + 1)])
    buf.write("\n")
    buf.write(json.dumps(summary) + "\n")
    _emit(buf.getvalue(), cfg)
    return 0


# -------------------------------------------------------------- interp

_INTERP_FUNCS = {
    "runge": (lambda z: 1.0 / (1.0 + z * z), 1.0 + math.sqrt(2.0)),
    "inv-shift": (lambda z: 1.0 / (z - 2.0), 2.0 + math.sqrt(3.0)),
    "exp": (cmath.exp, math.inf),
}

_EVAL_GRID = {"lo": -0.95, "hi": 0.95, "count": 41}


def _cmd_interp(args) -> int:
    if args.nmax < 6:
        return _usage_error("--nmax must be >= 6")
    evaluator, radius = _INTERP_FUNCS[args.func]
    f = AnalyticSampler(evaluator, radius)
    grid = np.linspace(_EVAL_GRID["lo"], _EVAL_GRID["hi"],
                       _EVAL_GRID["count"])
    curve = interpolation_error_curve(f, range(2, args.nmax + 1), grid)
    expected = math.log(radius) if math.isfinite(radius) else None
    try:
        fitted = convergence_rate(curve)
    except ValueError:
        fitted = None
    rel_dev = (abs(fitted - expected) / expected
               if fitted is not None and expected is not None else None)
    summary = {"func": args.func, "fitted_logR": fitted,
               "expected_logR": expected, "rel_dev": rel_dev}

    cfg = RunConfig("interp", {"func": args.func, "nmax": args.nmax},
                    args.format, args.output)
    if cfg.output_format == "json":
        doc = {"command": "interp",
               "params": {"func": args.func, "nmax": args.nmax, "n_min": 2,
                          "eval_grid": _EVAL_GRID},
               "curve": [[n, e] for n, e in curve],
               "summary": summary}
        _emit(_json_doc(doc), cfg)
        return 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "max_error"])
    for n, e in curve:
        w.writerow([n, _fmt(e)])
    buf.write("\n")
    buf.write(json.dumps(summary) + "\n")
    _emit(buf.getvalue(), cfg)
    return 0


# -------------------------------------------------------------- verify

def _cmd_verify(args) -> int:
    tail = None
    if args.tail_file is not None:
        try:
            tail = _tail_from_file(args.tail_file)
        except (OSError, ValueError) as exc:
            return _parse_error(f"cannot read tail file: {exc}")
    results = run_suite(args.suite, tail)
    ok = all(r.passed for r in results)

    cfg = RunConfig("verify", {"suite": args.suite}, args.format, args.output)
    if cfg.output_format == "json":
        doc = {"command": "verify", "suite": args.suite, "passed": ok,
               "counts": {"total": len(results),
                          "failed": sum(not r.passed for r in results)},
               "results": [r.to_json_dict() for r in results]}
        _emit(_json_doc(doc), cfg)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "residual", "tolerance", "passed"])
        for r in results:
            w.writerow([r.name, _fmt(r.residual), _fmt(r.tolerance),
                        "true" if r.passed else "false"])
        _emit(buf.getvalue(), cfg)
    return 0 if ok else 1


# ------------------------------------------------------------ plumbing

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="areakit",
        description="Series, closed-form and quadrature areas for conformal "
                    "images, ellipse orthogonality tables, and interpolation "
                    "convergence rates.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_format="csv"):
        sp.add_argument("--format", choices=("csv", "json"),
                        default=default_format)
        sp.add_argument("--output", metavar="PATH", default=None,
                        help="write to PATH instead of stdout")

    area = sub.add_parser("area", help="region area by every method")
    area.add_argument("--region", required=True,
                      choices=("circle", "ellipse", "cardioid", "lemniscate",
                               "custom-tail"))
    area.add_argument("--r", type=float, default=2.0,
                      help="circle radius in the preimage plane (default 2)")
    area.add_argument("--m", type=int, default=2,
                      help="number of lemniscate leaves (default 2)")
    area.add_argument("--trunc", type=int, default=200,
                      help="series truncation (default 200)")
    area.add_argument("--tail-file", default=None,
                      help="series JSON file with the exterior map")
    area.add_argument("--oracle", action="store_true",
                      help="add an independent quadrature row")
    common(area)

    ortho = sub.add_parser("ortho", help="Bergman Gram matrix on an ellipse")
    ortho.add_argument("--c", type=float, required=True,
                       help="ellipse parameter: semi-axes cosh c, sinh c")
    ortho.add_argument("--nmax", type=int, default=6,
                       help="largest polynomial degree, 0..12 (default 6)")
    ortho.add_argument("--order", type=int, default=32,
                       help="quadrature order (default 32)")
    common(ortho)

    interp = sub.add_parser("interp",
                            help="interpolation error curve and rate")
    interp.add_argument("--func", required=True,
                        choices=tuple(_INTERP_FUNCS))
    interp.add_argument("--nmax", type=int, default=24,
                        help="largest node count, >= 6 (default 24)")
    common(interp)

    verify = sub.add_parser("verify", help="run a self-check suite")
    verify.add_argument("--suite", required=True,
                        choices=("parseval", "gronwall", "gamma-identities",
                                 "pointmass", "all"))
    verify.add_argument("--tail-file", default=None,
                        help="optional custom tail for the gronwall suite")
    common(verify, default_format="json")
    return p


_DISPATCH = {"area": _cmd_area, "ortho": _cmd_ortho,
             "interp": _cmd_interp, "verify": _cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    return _DISPATCH[args.command](args)
