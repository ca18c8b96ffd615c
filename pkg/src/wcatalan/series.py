"""Truncated power series in t with coefficients in Q[x].

A :class:`Series` of order N stores exactly the coefficients of
t^0, ..., t^(N-1); trailing zeros are kept, since the order is part of the
value. Binary operations require equal orders.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import NonInvertibleSeriesError, OrderMismatchError
from .exact_arith import RationalLike, as_rational, format_rational
from .polynomial import ONE, ZERO, Poly, first_difference, format_poly


@dataclass(frozen=True)
class LinearExponent:
    """The exponent a + b*x."""

    const_part: Fraction = Fraction(0)
    x_part: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "const_part", as_rational(self.const_part))
        object.__setattr__(self, "x_part", as_rational(self.x_part))

    def __add__(self, other: "LinearExponent") -> "LinearExponent":
        return LinearExponent(self.const_part + other.const_part, self.x_part + other.x_part)

    def __neg__(self) -> "LinearExponent":
        return LinearExponent(-self.const_part, -self.x_part)

    def as_poly(self) -> Poly:
        return Poly((self.const_part, self.x_part))

    def __str__(self) -> str:
        if self.x_part == 0:
            return format_rational(self.const_part)
        return format_poly(self.as_poly())


class Series:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Poly | RationalLike]):
        c = tuple(v if isinstance(v, Poly) else Poly.constant(v) for v in coeffs)
        if not c:
            raise ValueError("series order must be at least 1")
        self._c = c

    @classmethod
    def constant(cls, c: Poly | RationalLike, order: int) -> "Series":
        return cls([c] + [ZERO] * (order - 1))

    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple[Poly, ...]:
        return self._c

    def __getitem__(self, n: int) -> Poly:
        return series_coeff(self, n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Series([{', '.join(format_poly(p) for p in self._c)}])"

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __neg__(self) -> "Series":
        return series_scale(self, -1)

    def __sub__(self, other: "Series") -> "Series":
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other: "Series | RationalLike") -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "Series":
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} series to order {order}")
        return Series(self._c[:order])

    def map(self, fn) -> "Series":
        """Apply ``fn`` to every coefficient polynomial."""
        return Series(fn(p) for p in self._c)


def _check_orders(s: Series, u: Series) -> None:
    if s.order != u.order:
        raise OrderMismatchError(f"series orders differ: {s.order} vs {u.order}")


def series_add(s: Series, u: Series) -> Series:
    _check_orders(s, u)
    return Series(a + b for a, b in zip(s.coeffs, u.coeffs))


def series_scale(s: Series, c: RationalLike) -> Series:
    return Series(p.scale(c) for p in s.coeffs)


def series_mul(s: Series, u: Series) -> Series:
    """Cauchy product truncated to the common order."""
    _check_orders(s, u)
    a, b = s.coeffs, u.coeffs
    out = []
    for n in range(s.order):
        acc = ZERO
        for l in range(n + 1):
            if a[l] and b[n - l]:
                acc = acc + a[l] * b[n - l]
        out.append(acc)
    return Series(out)


def series_reciprocal(s: Series) -> Series:
    """Inverse of s modulo t^order; s_0 must be a nonzero constant."""
    s0 = s.coeffs[0]
    if s0.is_zero() or not s0.is_constant():
        raise NonInvertibleSeriesError(
            f"non-invertible series: constant term {format_poly(s0)} is not a nonzero constant"
        )
    inv0 = 1 / s0.constant_term
    u = [Poly.constant(inv0)]
    for n in range(1, s.order):
        acc = ZERO
        for l in range(1, n + 1):
            if s.coeffs[l] and u[n - l]:
                acc = acc + s.coeffs[l] * u[n - l]
        u.append(acc.scale(-inv0))
    return Series(u)


def series_coeff(s: Series, n: int) -> Poly:
    if not 0 <= n < s.order:
        raise IndexError(f"coefficient index {n} out of range for order {s.order}")
    return s.coeffs[n]


def binomial_series(alpha: LinearExponent | RationalLike, order: int) -> Series:
    """(1 - 4t)^alpha to the given order.

    The coefficient of t^k is (-4)^k/k! * prod_{j<k} (a + b*x - j).
    """
    if order < 1:
        raise ValueError("series order must be at least 1")
    if not isinstance(alpha, LinearExponent):
        alpha = LinearExponent(alpha)
    a, b = alpha.const_part, alpha.x_part
    coeffs = [ONE]
    term = ONE
    for k in range(1, order):
        term = term * Poly((a - (k - 1), b)) * Fraction(-4, k)
        coeffs.append(term)
    return Series(coeffs)


def first_series_difference(s: Series, u: Series) -> Optional[int]:
    """Lowest t-index at which s and u differ, or ``None``."""
    _check_orders(s, u)
    for n, (p, q) in enumerate(zip(s.coeffs, u.coeffs)):
        if first_difference(p, q) is not None:
            return n
    return None


def format_series(s: Series | Sequence[Poly]) -> str:
    coeffs = s.coeffs if isinstance(s, Series) else s
    return "[" + ", ".join(format_poly(p) for p in coeffs) + "]"
