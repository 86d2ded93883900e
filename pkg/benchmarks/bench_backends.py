#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallbacks.

Runs each kernel on identical inputs through both backends and prints a
table of best-of-``repeats`` wall times plus the speedup ratio.  The two
backends are bit-identical by construction (asserted here on every run),
so this script is purely about speed.

Usage:
    python3 benchmarks/bench_backends.py [--size 4096] [--repeats 5]
"""

import argparse
import time

import numpy as np

from areakit import _pykernels

try:
    from areakit import _ckernels
except ImportError:
    _ckernels = None


def best_time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def make_cases(size, rng):
    xs = rng.standard_normal(size)
    cr = rng.standard_normal(64)
    ci = rng.standard_normal(64)
    zr = rng.uniform(-1.0, 1.0, size)
    zi = rng.uniform(-1.0, 1.0, size)
    m = 96
    theta = 2.0 * np.pi * np.arange(m) / m
    wr, wi = np.cos(theta), np.sin(theta)
    fr, fi = np.cos(3 * theta), np.sin(3 * theta)
    dfr, dfi = -3 * np.sin(3 * theta), 3 * np.cos(3 * theta)
    snaps = np.array([size // 8, size // 4, size // 2, size], dtype=np.int64)

    def eval_many(mod):
        out_r = np.empty(size)
        out_i = np.empty(size)
        mod.eval_series_many(0, cr, ci, zr, zi, out_r, out_i)
        return out_r.sum() + out_i.sum()

    def contour(mod):
        return mod.double_contour_sum(fr, fi, wr, wi, dfr, dfi)

    def scan(mod):
        out = np.empty(len(snaps))
        mod.binomial_square_scan(0.5, 1.0, 0.0, 0.0, size, 1, snaps, out)
        return out.sum()

    def nsum(mod):
        return mod.neumaier_sum(xs)

    return [("eval_series_many", eval_many),
            ("double_contour_sum", contour),
            ("binomial_square_scan", scan),
            ("neumaier_sum", nsum)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=4096,
                    help="points / terms per kernel call (default 4096)")
    ap.add_argument("--repeats", type=int, default=5,
                    help="timing repeats, best kept (default 5)")
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled backend unavailable; nothing to compare")
        return 1

    rng = np.random.default_rng(868686)
    print(f"{'kernel':24s} {'python':>12s} {'compiled':>12s} {'speedup':>9s}")
    for name, fn in make_cases(args.size, rng):
        t_py, v_py = best_time(lambda: fn(_pykernels), args.repeats)
        t_c, v_c = best_time(lambda: fn(_ckernels), args.repeats)
        assert v_py == v_c, f"{name}: backend mismatch {v_py} != {v_c}"
        print(f"{name:24s} {t_py * 1e3:10.3f}ms {t_c * 1e3:10.3f}ms "
              f"{t_py / t_c:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
