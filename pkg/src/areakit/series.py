"""Truncated complex Laurent/Taylor series with deterministic arithmetic.

A FormalSeries is a finite coefficient map exponent -> complex over a
declared exponent window [min_exp, max_exp].  Absent exponents are zero.
Evaluation sums in ascending exponent order with compensated
accumulation, so results are identical run to run and across the two
kernel backends.

Serialization format (also the CLI input format for user-supplied maps):

    {"min_exp": int, "max_exp": int, "coeffs": [[exp, re, im], ...]}

with exponents ascending.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

import numpy as np

from . import _kernels


class FormalSeries:
    """Finitely supported Laurent series sum_e c_e z^e, immutable."""

    __slots__ = ("min_exp", "max_exp", "_map", "_cre", "_cim")

    def __init__(self, coeffs: Mapping[int, complex] | Iterable[tuple[int, complex]],
                 min_exp: int, max_exp: int):
        if min_exp > max_exp:
            raise ValueError(f"empty exponent window: [{min_exp}, {max_exp}]")
        if isinstance(coeffs, Mapping):
            pairs = list(coeffs.items())
        else:
            pairs = list(coeffs)
        cmap: dict[int, complex] = {}
        seen: set[int] = set()
        for e, c in pairs:
            e = int(e)
            if e in seen:
                raise ValueError(f"duplicate exponent {e}")
            seen.add(e)
            if not (min_exp <= e <= max_exp):
                raise ValueError(f"exponent {e} outside [{min_exp}, {max_exp}]")
            c = complex(c)
            if c != 0:  # absent exponents are semantically zero
                cmap[e] = c
        object.__setattr__(self, "min_exp", int(min_exp))
        object.__setattr__(self, "max_exp", int(max_exp))
        object.__setattr__(self, "_map", dict(sorted(cmap.items())))
        # dense table over the full window feeds the evaluation kernel
        n = max_exp - min_exp + 1
        cre = np.zeros(n)
        cim = np.zeros(n)
        for e, c in cmap.items():
            cre[e - min_exp] = c.real
            cim[e - min_exp] = c.imag
        cre.flags.writeable = False
        cim.flags.writeable = False
        object.__setattr__(self, "_cre", cre)
        object.__setattr__(self, "_cim", cim)

    def __setattr__(self, name, value):
        raise AttributeError("FormalSeries is immutable")

    def coefficient(self, e: int) -> complex:
        """Coefficient at exponent e (zero if absent)."""
        return self._map.get(e, 0j)

    def items(self) -> tuple[tuple[int, complex], ...]:
        """Stored (exponent, coefficient) pairs, ascending."""
        return tuple(self._map.items())

    @property
    def is_taylor(self) -> bool:
        return self.min_exp >= 0

    @property
    def has_negative_support(self) -> bool:
        """True if any stored coefficient sits at a negative exponent."""
        return any(e < 0 for e in self._map)

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return (self.min_exp == other.min_exp and self.max_exp == other.max_exp
                and self._map == other._map)

    def __hash__(self):
        return hash((self.min_exp, self.max_exp, tuple(self._map.items())))

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        if not isinstance(other, FormalSeries):
            return NotImplemented
        out = dict(self._map)
        for e, c in other._map.items():
            out[e] = out.get(e, 0j) + c
        return FormalSeries(out, min(self.min_exp, other.min_exp),
                            max(self.max_exp, other.max_exp))

    def scaled(self, factor: complex) -> "FormalSeries":
        """Series with every coefficient multiplied by factor."""
        factor = complex(factor)
        return FormalSeries({e: factor * c for e, c in self._map.items()},
                            self.min_exp, self.max_exp)

    def __repr__(self):
        terms = ", ".join(f"{e}: {c:.6g}" for e, c in list(self._map.items())[:6])
        more = ", ..." if len(self._map) > 6 else ""
        return f"FormalSeries([{self.min_exp},{self.max_exp}] {{{terms}{more}}})"


def make_series(coeff_list: Iterable[tuple[int, complex]],
                min_exp: int, max_exp: int) -> FormalSeries:
    """Build a series from (exponent, coefficient) pairs."""
    return FormalSeries(coeff_list, min_exp, max_exp)


def evaluate(s: FormalSeries, z: complex) -> complex:
    """Sum of c_e z^e in ascending exponent order, compensated."""
    z = complex(z)
    if z == 0:
        if s.min_exp < 0:
            raise ValueError("evaluation at z = 0 with negative exponents present")
        # dense kernel handles z = 0 for min_exp >= 0 (0^0 = 1)
    re, im = _kernels.eval_series(s.min_exp, s._cre, s._cim, z.real, z.imag)
    return complex(re, im)


def evaluate_many(s: FormalSeries, zs: np.ndarray) -> np.ndarray:
    """Vector form of evaluate over an array of points."""
    zs = np.asarray(zs, dtype=complex)
    flat = zs.ravel()
    if s.min_exp < 0 and np.any(flat == 0):
        raise ValueError("evaluation at z = 0 with negative exponents present")
    zr = np.ascontiguousarray(flat.real)
    zi = np.ascontiguousarray(flat.imag)
    out_r = np.empty(flat.shape[0])
    out_i = np.empty(flat.shape[0])
    _kernels.eval_series_many(s.min_exp, s._cre, s._cim, zr, zi, out_r, out_i)
    return (out_r + 1j * out_i).reshape(zs.shape)


def derivative(s: FormalSeries) -> FormalSeries:
    """Termwise derivative; the exponent-0 term drops."""
    out = {e - 1: e * c for e, c in s.items() if e != 0}
    exps = [e for e in range(s.min_exp, s.max_exp + 1) if e != 0]
    if not exps:
        return FormalSeries({}, 0, 0)
    return FormalSeries(out, min(exps) - 1, max(exps) - 1)


def _require_taylor(*series: FormalSeries) -> None:
    for s in series:
        if s.min_exp < 0:
            raise ValueError("operation requires Taylor input (min_exp >= 0)")


def cauchy_product(f: FormalSeries, g: FormalSeries, trunc: int) -> FormalSeries:
    """Convolution product truncated at exponent trunc."""
    _require_taylor(f, g)
    if trunc < 0:
        raise ValueError("trunc must be >= 0")
    out: dict[int, complex] = {}
    for ef, cf in f.items():
        for eg, cg in g.items():
            e = ef + eg
            if e <= trunc:
                out[e] = out.get(e, 0j) + cf * cg
    return FormalSeries(out, 0, trunc)


def hadamard_product(f: FormalSeries, g: FormalSeries, trunc: int) -> FormalSeries:
    """Coefficientwise product a_n b_n z^n truncated at trunc."""
    _require_taylor(f, g)
    if trunc < 0:
        raise ValueError("trunc must be >= 0")
    out = {e: c * g.coefficient(e)
           for e, c in f.items() if e <= trunc and g.coefficient(e) != 0}
    return FormalSeries(out, 0, trunc)


def hadamard_contour_value(f: FormalSeries, g: FormalSeries, z: complex,
                           r: float = 1.0, nodes: int = 256) -> complex:
    """Contour form of the Hadamard product value at z.

    (1/2pi) * integral over theta of f(r e^{i theta}) g(z r^{-1} e^{-i theta}),
    evaluated by the periodic trapezoid rule with `nodes` points.  Agrees
    with evaluate(hadamard_product(f, g, ...), z) when r lies inside both
    radii of convergence and |z|/r inside g's.
    """
    _require_taylor(f, g)
    z = complex(z)
    if r <= 0:
        raise ValueError("contour radius must be positive")
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    w = r * np.exp(1j * theta)
    fw = evaluate_many(f, w)
    gw = evaluate_many(g, z / w)
    vals = fw * gw
    vr = np.ascontiguousarray(vals.real)
    vi = np.ascontiguousarray(vals.imag)
    re, im = _kernels.neumaier_csum(vr, vi)
    return complex(re, im) / nodes


class BinomialCoefficientSequence:
    """Generalized binomial coefficients C_n^alpha for n = 0..trunc."""

    __slots__ = ("alpha", "terms")

    def __init__(self, alpha: float, terms: Iterable[float]):
        object.__setattr__(self, "alpha", float(alpha))
        object.__setattr__(self, "terms", tuple(float(t) for t in terms))

    def __setattr__(self, name, value):
        raise AttributeError("BinomialCoefficientSequence is immutable")

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n):
        return self.terms[n]

    def __repr__(self):
        head = ", ".join(f"{t:.6g}" for t in self.terms[:5])
        return f"BinomialCoefficientSequence(alpha={self.alpha}, [{head}, ...])"


def binomial_coefficients(alpha: float, trunc: int) -> BinomialCoefficientSequence:
    """C_n^alpha for n = 0..trunc via C_{n+1} = C_n (alpha - n)/(n + 1)."""
    if trunc < 0:
        raise ValueError("trunc must be >= 0")
    terms = [1.0]
    c = 1.0
    for n in range(trunc):
        c = c * ((alpha - n) / (n + 1))
        terms.append(c)
    return BinomialCoefficientSequence(alpha, terms)


def binomial_expansion(m: int, trunc: int) -> BinomialCoefficientSequence:
    """Coefficients of (1 + u)^(1/m) up to order trunc."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return binomial_coefficients(1.0 / m, trunc)


def log_derivative_coeffs(f: FormalSeries, trunc: int) -> FormalSeries:
    """Taylor coefficients of z f'(z)/f(z) = 1 + b_1 z + b_2 z^2 + ...

    Requires f = a_1 z + a_2 z^2 + ... with a_1 != 0.  Solved from the
    defining identity (1 + b_1 z + ...) * f = z f' coefficient by
    coefficient.
    """
    _require_taylor(f)
    if f.coefficient(0) != 0:
        raise ValueError("f must vanish at 0 (no constant term)")
    a1 = f.coefficient(1)
    if a1 == 0:
        raise ValueError("degenerate input: coefficient of z must be nonzero")
    if trunc < 0:
        raise ValueError("trunc must be >= 0")
    # coefficient of z^{n+1} in (1 + sum b_k z^k) f equals (n+1) a_{n+1}:
    #   a_{n+1} + sum_{k=1}^{n} b_k a_{n+1-k} = (n+1) a_{n+1}
    b: dict[int, complex] = {0: 1.0 + 0j}
    for n in range(1, trunc + 1):
        rhs = n * f.coefficient(n + 1)
        acc = 0j
        for k in range(1, n):
            acc += b.get(k, 0j) * f.coefficient(n + 1 - k)
        b[n] = (rhs - acc) / a1
    return FormalSeries(b, 0, trunc)


def series_to_json_dict(s: FormalSeries) -> dict:
    """JSON-ready dict in the documented interchange format."""
    return {
        "min_exp": s.min_exp,
        "max_exp": s.max_exp,
        "coeffs": [[e, c.real, c.imag] for e, c in s.items()],
    }


def series_from_json_dict(d: Mapping) -> FormalSeries:
    """Parse the interchange format back into a series."""
    try:
        min_exp = int(d["min_exp"])
        max_exp = int(d["max_exp"])
        rows = d["coeffs"]
        pairs = []
        for row in rows:
            e, re, im = row
            pairs.append((int(e), complex(float(re), float(im))))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed series JSON: {exc}") from exc
    return FormalSeries(pairs, min_exp, max_exp)


def load_series(path) -> FormalSeries:
    """Read a series from a JSON file in the interchange format."""
    with open(path, encoding="utf-8") as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed series JSON in {path}: {exc}") from exc
    if not isinstance(d, Mapping):
        raise ValueError(f"malformed series JSON in {path}: expected an object")
    return series_from_json_dict(d)
