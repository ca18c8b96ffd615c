"""Truncated fermionic p-adic integrals as an independent numeric oracle.

The fermionic integral of f over Z_p is the limit of the alternating sums
sum_{y < p^N} f(y) (-1)^y. Here f(y) = binom((a + y)/2, k), evaluated in
Z/p^M; the closed forms are checked against successive truncations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .catalan import catalan_poly, require_odd
from .errors import NonUnitError, PrecisionError
from .exact_arith import RationalLike, as_rational, format_rational, gen_binomial
from .polynomial import poly_eval
from .report import Cell, IdentityId, VerificationReport

DEFAULT_N_CAP = {3: 12, 5: 8, 7: 6}
DEFAULT_X_LIST = (0, 1, 2, 3)
DEFAULT_SHIFTS = (1, 3, 5)


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    return all(p % q for q in range(3, math.isqrt(p) + 1, 2))


def _require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")


def default_n_cap(p: int) -> int:
    return DEFAULT_N_CAP.get(p, 5)


def valuation(n: int, p: int) -> Optional[int]:
    """p-adic valuation of a nonzero integer; ``None`` for zero."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def factorial_valuation(k: int, p: int) -> int:
    """v_p(k!) by Legendre's formula."""
    v, q = 0, p
    while q <= k:
        v += k // q
        q *= p
    return v


@dataclass(frozen=True)
class PadicInt:
    """Residue modulo p^M."""

    p: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    @classmethod
    def from_rational(cls, r: RationalLike, p: int, precision: int) -> "PadicInt":
        r = as_rational(r)
        if r.denominator % p == 0:
            raise NonUnitError(f"{format_rational(r)} is not a {p}-adic integer")
        mod = p**precision
        return cls(p, precision, r.numerator * pow(r.denominator, -1, mod))

    def _check(self, other: "PadicInt") -> None:
        if (self.p, self.precision) != (other.p, other.precision):
            raise ValueError("p-adic operands must share p and precision")

    def __add__(self, other: "PadicInt") -> "PadicInt":
        self._check(other)
        return PadicInt(self.p, self.precision, self.residue + other.residue)

    def __sub__(self, other: "PadicInt") -> "PadicInt":
        self._check(other)
        return PadicInt(self.p, self.precision, self.residue - other.residue)

    def __neg__(self) -> "PadicInt":
        return PadicInt(self.p, self.precision, -self.residue)

    def __mul__(self, other: "PadicInt") -> "PadicInt":
        self._check(other)
        return PadicInt(self.p, self.precision, self.residue * other.residue)

    def valuation(self) -> int:
        """Valuation of the residue, capped at the precision."""
        v = valuation(self.residue, self.p)
        return self.precision if v is None else min(v, self.precision)

    def inverse(self) -> "PadicInt":
        return padic_inverse(self)


def padic_inverse(u: PadicInt) -> PadicInt:
    if u.residue % u.p == 0:
        raise NonUnitError(f"non-unit: {u.residue} is divisible by {u.p}")
    return PadicInt(u.p, u.precision, pow(u.residue, -1, u.modulus))


def padic_binomial(z: int, k: int, p: int, M: int) -> PadicInt:
    """binom(z, k) mod p^M for an integer representative z.

    The falling factorial is reduced mod p^(M+v) with v = v_p(k!); exactly v
    factors of p are then cancelled against k! and the unit part of k! is
    inverted. z must be accurate to precision M+v.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    v = factorial_valuation(k, p)
    work = p ** (M + v)
    num = 1
    for j in range(k):
        num = num * (z - j) % work
    kf = math.factorial(k)
    unit = kf // p**v
    if num == 0:
        return PadicInt(p, M, 0)
    nv = valuation(num, p)
    if nv < v:
        raise PrecisionError(
            f"falling factorial carries p^{nv} but k! needs p^{v}; representative precision too low"
        )
    mod = p**M
    return PadicInt(p, M, (num // p**v) * pow(unit, -1, mod))


@dataclass(frozen=True)
class HalfBinomialSpec:
    """The integrand y -> binom((a + y)/2, k)."""

    shift_a: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be nonnegative")

    def exact(self, y: int) -> Fraction:
        return gen_binomial(Fraction(self.shift_a + y, 2), self.k)

    def shifted(self, n: int) -> "HalfBinomialSpec":
        return HalfBinomialSpec(self.shift_a + n, self.k)


def _partial_sums(f: HalfBinomialSpec, p: int, M: int, n_start: int, n_stop: int) -> Iterator[tuple[int, PadicInt]]:
    """Yield (N, sum_{y < p^N} f(y) (-1)^y mod p^M) for n_start <= N <= n_stop,
    extending one running sum."""
    work = p ** (M + factorial_valuation(f.k, p))
    inv2 = pow(2, -1, work)
    mod = p**M
    acc = 0
    y = 0
    for N in range(n_start, n_stop + 1):
        end = p**N
        while y < end:
            z = (f.shift_a + y) * inv2 % work
            term = padic_binomial(z, f.k, p, M).residue
            acc = acc - term if y & 1 else acc + term
            y += 1
        acc %= mod
        yield N, PadicInt(p, M, acc)


def fermionic_truncated_sum(f: HalfBinomialSpec, p: int, N: int, M: int) -> PadicInt:
    """sum_{y < p^N} binom((a+y)/2, k) (-1)^y mod p^M."""
    _require_odd_prime(p)
    if N < 1:
        raise ValueError("N must be at least 1")
    for _, s in _partial_sums(f, p, M, N, N):
        return s
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class Convergence:
    converged: bool
    n_converged: Optional[int]
    valuations: tuple[int, ...]
    value: PadicInt

    @property
    def tail_nondecreasing(self) -> bool:
        return tail_is_nondecreasing(self.valuations)


def tail_is_nondecreasing(valuations: Sequence[int]) -> bool:
    """The error valuations must not drop once they have become positive."""
    tail = list(valuations)
    while tail and tail[0] == 0:
        tail.pop(0)
    return all(a <= b for a, b in zip(tail, tail[1:]))


def converge_to(
    sums: Iterator[tuple[int, PadicInt]], target: PadicInt
) -> Convergence:
    """Consume truncations until two successive ones equal ``target``."""
    vals: list[int] = []
    hits = 0
    last = None
    for N, s in sums:
        last = s
        vals.append((s - target).valuation())
        hits = hits + 1 if s == target else 0
        if hits >= 2:
            return Convergence(True, N, tuple(vals), s)
    assert last is not None
    return Convergence(False, None, tuple(vals), last)


def _convergence_cell(params: dict, conv: Convergence, target: PadicInt, M: int) -> Cell:
    info = (
        ("target", target.residue),
        ("modulus", target.modulus),
        ("n_converged", conv.n_converged),
        ("error_valuations", list(conv.valuations)),
    )
    if not conv.converged:
        return Cell(tuple(params.items()), False, note="did not converge within N_cap", info=info)
    if not conv.tail_nondecreasing or conv.valuations[-1] < M:
        return Cell(tuple(params.items()), False, note="error valuations not monotone on the tail", info=info)
    return Cell(tuple(params.items()), True, info=info)


def eq11_target(n: int, x: int) -> Fraction:
    """(-1)^n C_n(x) / 4^n."""
    return Fraction((-1) ** n, 4**n) * poly_eval(catalan_poly(n), x)


def verify_eq11(
    p: int,
    n_max: int = 5,
    x_list: Sequence[int] = DEFAULT_X_LIST,
    M: int = 4,
    N_cap: Optional[int] = None,
) -> VerificationReport:
    """Fermionic integral of binom((x+y)/2, n) against (-1)^n C_n(x)/4^n."""
    _require_odd_prime(p)
    if M < 1:
        raise ValueError("M must be at least 1")
    N_cap = default_n_cap(p) if N_cap is None else N_cap
    if N_cap < 2:
        raise ValueError("N_cap must be at least 2")
    rep = VerificationReport(IdentityId.EQ11)
    for x in x_list:
        for n in range(n_max + 1):
            params = {"p": p, "M": M, "n": n, "x": x}
            exact = eq11_target(n, x)
            if exact.denominator % p == 0:
                rep.cells.append(Cell(tuple(params.items()), None, note="denominator not a p-unit"))
                continue
            target = PadicInt.from_rational(exact, p, M)
            conv = converge_to(_partial_sums(HalfBinomialSpec(x, n), p, M, 2, N_cap), target)
            rep.cells.append(_convergence_cell(params, conv, target, M))
    return rep


def eq3_rhs(f: HalfBinomialSpec, n_shift: int) -> Fraction:
    """2 sum_{l<n} (-1)^(n-1-l) f(l)."""
    total = Fraction(0)
    for l in range(n_shift):
        term = f.exact(l)
        total += -term if (n_shift - 1 - l) % 2 else term
    return 2 * total


def verify_eq2_eq3(
    p: int,
    spec: HalfBinomialSpec,
    n_shift: int,
    M: int = 4,
    N_cap: Optional[int] = None,
    report: Optional[VerificationReport] = None,
) -> VerificationReport:
    """Integral of f(y+n) plus integral of f(y) against 2 sum_{l<n} (-1)^(n-1-l) f(l).

    Both integrals are truncated at the same N; the cell passes once two
    successive truncations of their sum agree with the right-hand side.
    Pass ``report`` to append to an existing report.
    """
    _require_odd_prime(p)
    require_odd(n_shift)
    N_cap = default_n_cap(p) if N_cap is None else N_cap
    rep = report if report is not None else VerificationReport(IdentityId.EQ2_EQ3)
    params = {"p": p, "M": M, "a": spec.shift_a, "k": spec.k, "shift": n_shift}
    exact = eq3_rhs(spec, n_shift)
    if exact.denominator % p == 0:
        rep.cells.append(Cell(tuple(params.items()), None, note="denominator not a p-unit"))
        return rep
    target = PadicInt.from_rational(exact, p, M)
    pairs = zip(
        _partial_sums(spec.shifted(n_shift), p, M, 2, N_cap),
        _partial_sums(spec, p, M, 2, N_cap),
    )
    sums = ((N, s1 + s0) for (N, s1), (_, s0) in pairs)
    rep.cells.append(_convergence_cell(params, converge_to(sums, target), target, M))
    return rep


def sweep_eq2_eq3(
    p: int,
    k_max: int = 5,
    a_list: Sequence[int] = DEFAULT_X_LIST,
    shifts: Sequence[int] = DEFAULT_SHIFTS,
    M: int = 4,
    N_cap: Optional[int] = None,
) -> VerificationReport:
    require_odd(*shifts)
    rep = VerificationReport(IdentityId.EQ2_EQ3)
    for a in a_list:
        for k in range(k_max + 1):
            for n_shift in shifts:
                verify_eq2_eq3(p, HalfBinomialSpec(a, k), n_shift, M, N_cap, report=rep)
    return rep
