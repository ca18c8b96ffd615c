"""Catalan and w-Catalan polynomials built from their generating functions.

The w-Catalan generating function is

    2 / (1 + (1-4t)^(w/2)) * (1-4t)^(w*x/2) = sum_n C_{n,w}(x) t^n,

and w = 1 gives the ordinary Catalan polynomials C_n(x).
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

from .errors import ParityError
from .exact_arith import catalan_number, gen_binomial, stirling1
from .polynomial import ONE, ZERO, Poly
from .series import (
    LinearExponent,
    Series,
    binomial_series,
    series_add,
    series_mul,
    series_reciprocal,
    series_scale,
)

HALF = Fraction(1, 2)


def require_odd(*values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 1 or v % 2 == 0:
            raise ParityError()


def _require_positive(w: int) -> None:
    if not isinstance(w, int) or w < 1:
        raise ValueError(f"w must be a positive integer, got {w!r}")


def _one_plus(s: Series) -> Series:
    return series_add(Series.constant(ONE, s.order), s)


def halving_factor(half_exponent: Fraction, order: int) -> Series:
    """2 / (1 + (1-4t)^e)."""
    return series_scale(series_reciprocal(_one_plus(binomial_series(half_exponent, order))), 2)


def catalan_series(order: int) -> Series:
    """Generating series of C_n(x): 2/(1+sqrt(1-4t)) * (1-4t)^(x/2)."""
    return series_mul(halving_factor(HALF, order), binomial_series(LinearExponent(0, HALF), order))


def catalan_number_series(order: int) -> Series:
    """2/(1+sqrt(1-4t)), whose coefficients are the Catalan numbers."""
    return halving_factor(HALF, order)


def w_catalan_series(w: int, order: int) -> Series:
    _require_positive(w)
    e = Fraction(w, 2)
    return series_mul(halving_factor(e, order), binomial_series(LinearExponent(0, e), order))


class _SeriesCache:
    """Per-key cache of the longest series built so far."""

    def __init__(self, build) -> None:
        self._build = build
        self._store: dict[object, Series] = {}
        self._lock = threading.Lock()

    def get(self, key, order: int) -> Series:
        s = self._store.get(key)
        if s is None or s.order < order:
            with self._lock:
                s = self._store.get(key)
                if s is None or s.order < order:
                    grow = max(order, 2 * s.order if s is not None else 16)
                    s = self._build(key, grow)
                    self._store[key] = s
        return s if s.order == order else s.truncate(order)


_catalan_cache = _SeriesCache(lambda _key, order: catalan_series(order))
_w_catalan_cache = _SeriesCache(w_catalan_series)


def catalan_poly(n: int) -> Poly:
    """C_n(x)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _catalan_cache.get(None, n + 1)[n]


def w_catalan_poly(n: int, w: int) -> Poly:
    """C_{n,w}(x); any positive w is accepted."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _require_positive(w)
    return _w_catalan_cache.get(w, n + 1)[n]


def w_catalan_number(n: int, w: int) -> Fraction:
    return w_catalan_poly(n, w).constant_term


def catalan_poly_stirling(n: int) -> Poly:
    """C_n(x) through the Stirling expansion

        sum_{m<=n} sum_{j<=m} (x/2)^j S1(m,j) (-4)^m C_{n-m} / m!.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = ZERO
    for m in range(n + 1):
        scale = Fraction((-4) ** m) * catalan_number(n - m) / math.factorial(m)
        coeffs = [Fraction(stirling1(m, j)) / 2**j for j in range(m + 1)]
        total = total + Poly(coeffs).scale(scale)
    return total


def s_kd(k: int, d: int, w: int) -> Fraction:
    """S_{k,d}(w-1) = sum_{i<w} binom(d*i/2, k) (-1)^i, for odd d and w."""
    require_odd(d, w)
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = Fraction(0)
    for i in range(w):
        term = gen_binomial(Fraction(d * i, 2), k)
        total += -term if i % 2 else term
    return total


def alternating_half_power_series(d: int, w: int, order: int) -> Series:
    """sum_{i<w} (-1)^i (1-4t)^(d*i/2)."""
    require_odd(d, w)
    total = Series.constant(ZERO, order)
    for i in range(w):
        term = binomial_series(Fraction(d * i, 2), order)
        total = series_add(total, series_scale(term, -1) if i % 2 else term)
    return total


def double_ratio_series(w1: int, w2: int, order: int) -> Series:
    """2 (1-4t)^(w1 w2 x/2) ((1-4t)^(w1 w2/2) + 1) / (((1-4t)^(w1/2) + 1)((1-4t)^(w2/2) + 1))."""
    require_odd(w1, w2)
    if order < 1:
        raise ValueError("series order must be at least 1")
    prod = Fraction(w1 * w2, 2)
    num = series_mul(
        binomial_series(LinearExponent(0, prod), order),
        _one_plus(binomial_series(prod, order)),
    )
    den1 = series_reciprocal(_one_plus(binomial_series(Fraction(w1, 2), order)))
    den2 = series_reciprocal(_one_plus(binomial_series(Fraction(w2, 2), order)))
    return series_scale(series_mul(series_mul(num, den1), den2), 2)
