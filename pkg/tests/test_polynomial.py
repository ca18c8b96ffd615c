from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wcatalan.polynomial import (
    ONE,
    X,
    ZERO,
    Poly,
    first_difference,
    format_poly,
    poly_add,
    poly_affine_substitute,
    poly_eval,
    poly_mul,
)

C1 = Poly((1, -2))
C2 = Poly((2, -6, 2))


def test_normalization_and_zero_degree():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly((0, 0)) == ZERO
    assert ZERO.degree is None
    assert ONE.degree == 0
    assert C2.degree == 2


def test_add_examples():
    assert poly_add(ZERO, C2) == C2
    assert poly_add(C1, Poly((-1, 2))) == ZERO
    assert poly_add(C1, C2) == Poly((3, -8, 2))


def test_mul_examples():
    assert poly_mul(ONE, C2) == C2
    assert poly_mul(X, X) == Poly((0, 0, 1))
    assert poly_mul(C1, Poly((1, 2))) == Poly((1, 0, -4))


def test_affine_substitute_examples():
    assert poly_affine_substitute(C2, 1, 0) == C2
    assert poly_affine_substitute(C1, 3, 0) == Poly((1, -6))
    assert poly_affine_substitute(C1, 1, Fraction(1, 3)) == Poly((Fraction(1, 3), -2))


@pytest.mark.parametrize("p, r, expected", [(C1, 0, 1), (C1, 3, -5), (C2, 1, -2)])
def test_eval_examples(p, r, expected):
    assert poly_eval(p, r) == expected


@pytest.mark.parametrize(
    "p, text",
    [
        (ZERO, "0"),
        (C2, "2*x^2 - 6*x + 2"),
        (C1, "-2*x + 1"),
        (Poly((Fraction(1, 3), -1)), "-x + 1/3"),
        (Poly((0, Fraction(-56, 3), 0, 1)), "x^3 - 56/3*x"),
    ],
)
def test_format(p, text):
    assert format_poly(p) == text


def test_first_difference():
    assert first_difference(C2, C2) is None
    assert first_difference(C2, Poly((2, -6, 3))) == 2
    assert first_difference(C1, ZERO) == 0


coeff = st.sampled_from([Fraction(v, d) for v in range(-3, 4) for d in (1, 2, 3)])
polys = st.lists(coeff, max_size=5).map(Poly)
nonzero = coeff.filter(bool)


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * q == q * p


@settings(max_examples=80, deadline=None)
@given(polys, nonzero, coeff, nonzero, coeff)
def test_substitution_composes(p, a, b, a2, b2):
    twice = poly_affine_substitute(poly_affine_substitute(p, a, b), a2, b2)
    assert twice == poly_affine_substitute(p, a * a2, a * b2 + b)


@settings(max_examples=80, deadline=None)
@given(polys, coeff, coeff, coeff)
def test_eval_after_substitute(p, a, b, r):
    assert poly_eval(poly_affine_substitute(p, a, b), r) == poly_eval(p, a * r + b)
