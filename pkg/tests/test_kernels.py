"""The compiled kernels and the pure-Python twins must agree bit for bit."""

import math

import numpy as np
import pytest

from areakit import _pykernels

ck = pytest.importorskip("areakit._ckernels")

RNG = np.random.default_rng(90125)


def _rand(n):
    return RNG.standard_normal(n)


def test_backend_tags():
    assert _pykernels.BACKEND == "python"
    assert ck.BACKEND == "c"


def test_neumaier_adversarial_cancellation():
    xs = np.array([1e16, 1.0, -1e16])
    # naive float summation loses the 1.0
    assert _pykernels.neumaier_sum(xs) == 1.0
    assert ck.neumaier_sum(xs) == 1.0


@pytest.mark.parametrize("n", [0, 1, 7, 256, 4097])
def test_neumaier_sum_parity(n):
    xs = _rand(n) * 10.0 ** RNG.integers(-8, 8, size=max(n, 1))[:n]
    assert _pykernels.neumaier_sum(xs) == ck.neumaier_sum(xs)


@pytest.mark.parametrize("n", [1, 64, 1001])
def test_neumaier_csum_parity(n):
    xr, xi = _rand(n), _rand(n)
    assert _pykernels.neumaier_csum(xr, xi) == ck.neumaier_csum(xr, xi)


@pytest.mark.parametrize("n", [1, 128, 2048])
def test_weighted_kernels_parity(n):
    vr, vi, w = _rand(n), _rand(n), np.abs(_rand(n))
    assert (_pykernels.weighted_abs2_sum(vr, vi, w)
            == ck.weighted_abs2_sum(vr, vi, w))
    br, bi = _rand(n), _rand(n)
    assert (_pykernels.weighted_conj_dot(vr, vi, br, bi, w)
            == ck.weighted_conj_dot(vr, vi, br, bi, w))


@pytest.mark.parametrize("min_exp", [-5, 0, 2])
def test_eval_series_parity_and_value(min_exp):
    k = 9
    cr, ci = _rand(k), _rand(k)
    for zr, zi in [(0.3, -1.2), (2.0, 0.0), (-0.7, 0.4)]:
        got_p = _pykernels.eval_series(min_exp, cr, ci, zr, zi)
        got_c = ck.eval_series(min_exp, cr, ci, zr, zi)
        assert got_p == got_c
        z = complex(zr, zi)
        want = sum(complex(cr[j], ci[j]) * z ** (min_exp + j)
                   for j in range(k))
        assert abs(complex(*got_p) - want) < 1e-12 * max(1.0, abs(want))


def test_eval_series_many_parity():
    k, n = 7, 513
    cr, ci = _rand(k), _rand(k)
    zr, zi = _rand(n), _rand(n)
    outs = [np.empty(n), np.empty(n), np.empty(n), np.empty(n)]
    _pykernels.eval_series_many(-2, cr, ci, zr, zi, outs[0], outs[1])
    ck.eval_series_many(-2, cr, ci, zr, zi, outs[2], outs[3])
    assert np.array_equal(outs[0], outs[2])
    assert np.array_equal(outs[1], outs[3])


def test_eval_series_accepts_readonly_views():
    cr = np.array([1.0, 2.0])
    cr.setflags(write=False)
    ci = np.zeros(2)
    ci.setflags(write=False)
    assert ck.eval_series(0, cr, ci, 0.5, 0.0) == (2.0, 0.0)
    assert _pykernels.eval_series(0, cr, ci, 0.5, 0.0) == (2.0, 0.0)


def test_double_contour_sum_parity():
    n = 96
    theta = np.arange(n) * (2.0 * math.pi / n)
    w = np.exp(1j * theta)
    f = w + 0.35 * w ** 2 - 0.1j * w ** 3
    df = 1.0 + 0.7 * w - 0.3j * w ** 2
    args = (np.ascontiguousarray(f.real), np.ascontiguousarray(f.imag),
            np.ascontiguousarray(w.real), np.ascontiguousarray(w.imag),
            np.ascontiguousarray(df.real), np.ascontiguousarray(df.imag))
    assert _pykernels.double_contour_sum(*args) == ck.double_contour_sum(*args)


@pytest.mark.parametrize("alpha,cap", [(0.5, 10000), (1.0 / 3.0, 2000),
                                       (1.0, 50)])
def test_binomial_scan_parity(alpha, cap):
    snaps = np.array([cap // 4, cap // 2, cap], dtype=np.longlong)
    out_p = np.zeros(len(snaps))
    out_c = np.zeros(len(snaps))
    res_p = _pykernels.binomial_square_scan(alpha, 1.0, -2.0, 1e-14, cap, 1,
                                            snaps, out_p)
    res_c = ck.binomial_square_scan(alpha, 1.0, -2.0, 1e-14, cap, 1,
                                    snaps, out_c)
    assert res_p == res_c
    assert np.array_equal(out_p, out_c)


def test_binomial_scan_min_k_prevents_zero_term_stop():
    # with w0 = 0 the k = 0 term vanishes; min_k must push past it
    snaps = np.array([50], dtype=np.longlong)
    out = np.zeros(1)
    k_stop, hit, _ = _pykernels.binomial_square_scan(
        1.0, 0.0, 1.0, 1e-14, 50, 1, snaps, out)
    assert out[0] == 1.0  # sum k*C_k^2 at alpha=1 is exactly 1
