"""Dense univariate polynomials over Q in the indeterminate x."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Union

from .exact_arith import RationalLike, as_rational


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and ``degree`` ``None``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        c = [as_rational(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def _raw(cls, c: tuple[Fraction, ...]) -> "Poly":
        # caller guarantees normalization
        p = cls.__new__(cls)
        p._c = c
        return p

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def coeff(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coeff(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly.constant(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-a for a in self._c))

    def __add__(self, other: Union["Poly", RationalLike]) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __sub__(self, other: Union["Poly", RationalLike]) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Union["Poly", RationalLike]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "Poly":
        c = as_rational(c)
        if c == 0:
            return Poly._raw(())
        return Poly._raw(tuple(a * c for a in self._c))

    def __call__(self, r: RationalLike) -> Fraction:
        return poly_eval(self, r)


def _coerce(v: object) -> Optional[Poly]:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.constant(v)
    return None


ZERO = Poly()
ONE = Poly.constant(1)
X = Poly.x()


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval(p: Poly, r: RationalLike) -> Fraction:
    r = as_rational(r)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * r + a
    return acc


def poly_affine_substitute(p: Poly, a: RationalLike, b: RationalLike) -> Poly:
    """Return p(a*x + b) by Horner's scheme."""
    lin = Poly((b, a))
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * lin + c
    return acc


def first_difference(p: Poly, q: Poly) -> Optional[int]:
    """Lowest power of x whose coefficients differ, or ``None`` if p == q."""
    n = max(len(p.coeffs), len(q.coeffs))
    for i in range(n):
        if p.coeff(i) != q.coeff(i):
            return i
    return None


def format_poly(p: Poly) -> str:
    """Descending powers with exact rationals, e.g. ``2*x^2 - 6*x + 2``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if i == 0:
            body = str(mag)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)
