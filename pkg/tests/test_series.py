from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wcatalan.errors import NonInvertibleSeriesError, OrderMismatchError
from wcatalan.exact_arith import catalan_number, gen_binomial
from wcatalan.polynomial import ONE, Poly
from wcatalan.series import (
    LinearExponent,
    Series,
    binomial_series,
    series_add,
    series_coeff,
    series_mul,
    series_reciprocal,
    series_scale,
)

HALF = Fraction(1, 2)


def test_binomial_series_examples():
    assert binomial_series(0, 5) == Series.constant(1, 5)
    assert binomial_series(HALF, 3).coeffs == (Poly((1,)), Poly((-2,)), Poly((-2,)))
    s = binomial_series(LinearExponent(0, HALF), 4)
    assert series_coeff(s, 0) == ONE
    assert series_coeff(s, 1) == Poly((0, -2))


def test_series_coeff_out_of_range():
    with pytest.raises(IndexError):
        series_coeff(binomial_series(HALF, 2), 2)


def test_mul_examples():
    u = binomial_series(Fraction(1, 3), 5)
    assert series_mul(Series.constant(1, 5), u) == u
    root = binomial_series(HALF, 6)
    assert series_mul(root, root) == binomial_series(1, 6)
    a = Series([1, Poly((0, -2)), 0])
    b = Series([1, Poly((0, 2)), 0])
    assert series_mul(a, b) == Series([1, 0, Poly((0, 0, -4))])


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        series_mul(binomial_series(HALF, 3), binomial_series(HALF, 4))
    with pytest.raises(OrderMismatchError):
        series_add(binomial_series(HALF, 3), binomial_series(HALF, 4))


def test_reciprocal_examples():
    assert series_reciprocal(Series.constant(2, 4)) == Series.constant(HALF, 4)
    one = Series.constant(1, 4)
    catalan_half = series_reciprocal(series_add(one, binomial_series(HALF, 4)))
    assert catalan_half == series_scale(Series([1, 1, 2, 5]), HALF)
    three_half = series_reciprocal(series_add(one, binomial_series(Fraction(3, 2), 4)))
    assert three_half == series_scale(Series([1, 3, 6, 7]), HALF)


def test_reciprocal_yields_catalan_numbers():
    n = 31
    s = series_scale(series_reciprocal(series_add(Series.constant(1, n), binomial_series(HALF, n))), 2)
    assert [c.constant_term for c in s.coeffs] == [catalan_number(k) for k in range(n)]


def test_reciprocal_rejects_non_units():
    with pytest.raises(NonInvertibleSeriesError):
        series_reciprocal(Series([0, 1, 1]))
    with pytest.raises(NonInvertibleSeriesError):
        series_reciprocal(Series([Poly((1, 1)), 1]))


def test_add_and_scale_consistency():
    s = binomial_series(HALF, 2)
    assert series_add(s, Series.constant(0, 2)) == s
    assert series_scale(s, 1) == s
    assert series_add(s, s) == series_scale(s, 2)


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
exponents = st.builds(LinearExponent, rationals, rationals)
orders = st.integers(1, 16)


@settings(max_examples=30, deadline=None)
@given(exponents, exponents, orders)
def test_exponent_additivity(a, b, n):
    assert series_mul(binomial_series(a, n), binomial_series(b, n)) == binomial_series(a + b, n)


@settings(max_examples=30, deadline=None)
@given(exponents, orders)
def test_inverse_exponent(a, n):
    assert series_mul(binomial_series(a, n), binomial_series(-a, n)) == Series.constant(1, n)


@settings(max_examples=30, deadline=None)
@given(exponents, st.integers(1, 12), st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool))
def test_reciprocal_round_trip(a, n, c):
    s = series_add(Series.constant(c, n), binomial_series(a, n))
    if s.coeffs[0].is_zero():
        return
    assert series_mul(s, series_reciprocal(s)) == Series.constant(1, n)


@pytest.mark.parametrize("d, i", [(1, 1), (3, 1), (3, 2), (5, 3), (7, 4)])
def test_constant_exponent_matches_gen_binomial(d, i):
    s = binomial_series(Fraction(d * i, 2), 10)
    for k in range(10):
        assert s[k] == Poly.constant(gen_binomial(Fraction(d * i, 2), k) * (-4) ** k)
