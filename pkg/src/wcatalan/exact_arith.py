"""Exact scalar arithmetic: rationals, generalized binomials, Stirling numbers.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator and represents zero as ``0/1``.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


def as_rational(r: RationalLike) -> Fraction:
    if isinstance(r, Fraction):
        return r
    if isinstance(r, int):
        return Fraction(r)
    raise TypeError(f"expected int or Fraction, got {type(r).__name__}")


def format_rational(r: RationalLike) -> str:
    """Render as ``"p"`` or ``"p/q"``."""
    return str(as_rational(r))


def gen_binomial(r: RationalLike, k: int) -> Fraction:
    """binom(r, k) = r(r-1)...(r-k+1)/k! for any rational r."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    r = as_rational(r)
    num = Fraction(1)
    for j in range(k):
        num *= r - j
    return num / math.factorial(k)


class StirlingTable:
    """Triangular table of signed Stirling numbers of the first kind.

    Rows are built with S(m+1, j) = S(m, j-1) - m*S(m, j) and only ever
    appended, so concurrent readers never see a partially built row.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    @property
    def max_m(self) -> int:
        return len(self._rows) - 1

    def _grow(self, m: int) -> None:
        with self._lock:
            while len(self._rows) <= m:
                prev = self._rows[-1]
                mm = len(prev) - 1
                row = [0] * (mm + 2)
                for j in range(1, mm + 2):
                    left = prev[j - 1]
                    here = prev[j] if j <= mm else 0
                    row[j] = left - mm * here
                self._rows.append(tuple(row))

    def row(self, m: int) -> tuple[int, ...]:
        if m < 0:
            raise ValueError("m must be nonnegative")
        if m > self.max_m:
            self._grow(m)
        return self._rows[m]

    def __call__(self, m: int, j: int) -> int:
        if j < 0:
            raise ValueError("j must be nonnegative")
        if j > m:
            return 0
        return self.row(m)[j]


_STIRLING = StirlingTable()


def stirling1(m: int, j: int) -> int:
    """Signed S1(m, j), defined by (z)_m = sum_j S1(m, j) z^j.

    Returns 0 when j > m.
    """
    return _STIRLING(m, j)


def catalan_number(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(math.comb(2 * n, n), n + 1)
