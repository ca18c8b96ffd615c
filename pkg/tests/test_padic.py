import math
from fractions import Fraction

import pytest

from wcatalan.errors import NonUnitError, ParityError, PrecisionError
from wcatalan.padic import (
    HalfBinomialSpec,
    PadicInt,
    eq3_rhs,
    factorial_valuation,
    fermionic_truncated_sum,
    is_odd_prime,
    padic_binomial,
    padic_inverse,
    sweep_eq2_eq3,
    tail_is_nondecreasing,
    verify_eq11,
    verify_eq2_eq3,
)


@pytest.mark.parametrize("p, M, u, inv", [(3, 5, 1, 1), (3, 2, 2, 5), (5, 3, 4, 94)])
def test_inverse_examples(p, M, u, inv):
    assert padic_inverse(PadicInt(p, M, u)).residue == inv


def test_inverse_non_unit():
    with pytest.raises(NonUnitError):
        padic_inverse(PadicInt(3, 4, 6))


def test_padic_int_arithmetic_and_mixing():
    a, b = PadicInt(5, 2, 7), PadicInt(5, 2, 20)
    assert (a + b).residue == 2
    assert (a * b).residue == 140 % 25
    assert (-a).residue == 18
    with pytest.raises(ValueError):
        a + PadicInt(5, 3, 1)
    assert PadicInt.from_rational(Fraction(5, 4), 5, 3).residue == 95


def test_binomial_examples():
    assert padic_binomial(17, 0, 3, 4).residue == 1
    assert padic_binomial(6, 2, 5, 2).residue == 15
    # 41 represents 1/2 mod 81, so binom(41, 1) is 1/2 mod 27
    assert padic_binomial(41, 1, 3, 3).residue == 14
    assert 2 * 14 % 27 == 1


def test_binomial_matches_exact_integers():
    for p in (3, 5, 7):
        for M in range(1, 5):
            mod = p**M
            for z in range(41):
                for k in range(13):
                    assert padic_binomial(z, k, p, M).residue == math.comb(z, k) % mod


def test_binomial_pascal_rule():
    for p in (3, 5, 7):
        for M in (1, 3):
            for z in range(40):
                for k in range(1, 13):
                    lhs = padic_binomial(z + 1, k, p, M)
                    rhs = padic_binomial(z, k, p, M) + padic_binomial(z, k - 1, p, M)
                    assert lhs == rhs


def test_binomial_precision_assertion(monkeypatch):
    # Integer representatives always carry enough p-power; force the
    # bookkeeping to demand more than 4*3*2 = 24 has.
    from wcatalan import padic

    monkeypatch.setattr(padic, "factorial_valuation", lambda k, p: 2)
    with pytest.raises(PrecisionError):
        padic_binomial(4, 3, 3, 2)


def test_legendre():
    assert factorial_valuation(5, 5) == 1
    assert factorial_valuation(25, 5) == 6
    assert factorial_valuation(12, 3) == 5


@pytest.mark.parametrize("N", [1, 2, 3, 5])
def test_constant_integrand_sums_to_one(N):
    for p in (3, 5, 7):
        assert fermionic_truncated_sum(HalfBinomialSpec(0, 0), p, N, 3).residue == 1


def test_truncated_sum_hand_values():
    f = HalfBinomialSpec(0, 1)
    assert fermionic_truncated_sum(f, 3, 2, 2).residue == 2
    assert fermionic_truncated_sum(f, 3, 4, 4).residue == 20
    assert PadicInt.from_rational(Fraction(-1, 4), 3, 4).residue == 20


def test_truncated_sum_matches_exact_fraction_sum():
    for p, N, M in [(3, 3, 3), (5, 2, 3), (7, 2, 2)]:
        for a in (0, 1, 4):
            for k in range(5):
                spec = HalfBinomialSpec(a, k)
                exact = sum((-1) ** y * spec.exact(y) for y in range(p**N))
                assert fermionic_truncated_sum(spec, p, N, M) == PadicInt.from_rational(exact, p, M)


def test_eq11_hand_cells():
    rep = verify_eq11(3, 1, [0], 4)
    assert rep.ok
    cell = rep.cells[1]
    assert cell.params_dict() == {"p": 3, "M": 4, "n": 1, "x": 0}
    assert dict(cell.info)["target"] == 20
    rep = verify_eq11(5, 1, [3], 3)
    assert rep.ok
    # (-1/4) * C_1(3) = 5/4, and 5 * 4^-1 mod 125 = 95
    assert dict(rep.cells[1].info)["target"] == 95


def test_eq11_nonconvergence_is_reported():
    rep = verify_eq11(3, 3, [0], 6, N_cap=3)
    assert not rep.ok
    assert any(c.note == "did not converge within N_cap" for c in rep.failures)


def test_eq11_error_valuations_are_monotone():
    for p, M in [(3, 4), (5, 4), (7, 3)]:
        rep = verify_eq11(p, 5, [0, 1, 2, 3], M)
        assert rep.ok
        for c in rep.cells:
            vals = dict(c.info)["error_valuations"]
            assert tail_is_nondecreasing(vals) and vals[-1] == M


def test_tail_check():
    assert tail_is_nondecreasing([0, 0, 1, 2, 2])
    assert not tail_is_nondecreasing([0, 2, 1, 3])


def test_eq2_eq3_examples():
    assert eq3_rhs(HalfBinomialSpec(0, 0), 5) == 2
    assert eq3_rhs(HalfBinomialSpec(0, 1), 1) == 0
    assert eq3_rhs(HalfBinomialSpec(0, 1), 3) == 1
    assert verify_eq2_eq3(3, HalfBinomialSpec(0, 0), 3, 3).ok
    assert verify_eq2_eq3(3, HalfBinomialSpec(0, 1), 1, 3).ok
    assert verify_eq2_eq3(5, HalfBinomialSpec(0, 1), 3, 2).ok


def test_shifted_integral_is_quarter():
    # integral of binom((y+1)/2, 1) is 1/4
    got = fermionic_truncated_sum(HalfBinomialSpec(1, 1), 3, 6, 3)
    assert got == PadicInt.from_rational(Fraction(1, 4), 3, 3)


def test_eq2_eq3_even_shift_rejected():
    with pytest.raises(ParityError):
        verify_eq2_eq3(3, HalfBinomialSpec(0, 1), 2, 3)


def test_sweep():
    rep = sweep_eq2_eq3(5, 3, [0, 2], [1, 3], 3)
    assert rep.ok and len(rep.cells) == 2 * 4 * 2


def test_prime_validation():
    assert [p for p in range(20) if is_odd_prime(p)] == [3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        verify_eq11(9, 1, [0], 2)
    with pytest.raises(ValueError):
        fermionic_truncated_sum(HalfBinomialSpec(0, 1), 2, 2, 2)
