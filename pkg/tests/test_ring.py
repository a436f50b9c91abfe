from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from edslab.errors import NonUnit, NonUnitDenominator, NotCoprime, NotPrime, PrecisionMismatch, UnsupportedPrime
from edslab.ring import (
    GF, QQ, PadicResidue, ResidueRing, mult_order, p_free_part, padic_valuation,
    parse_rational, residue_of, teichmuller_unit, unit_inverse,
)

PRIMES = [3, 5, 7, 11, 13, 97]


def test_valuation_examples():
    assert padic_valuation(50, 5) == 2
    assert padic_valuation(Fraction(-3, 7), 7) == -1
    assert padic_valuation(0, 3) == math.inf


def test_residue_examples():
    assert residue_of(Fraction(1, 2), 5, 2).value == 13
    assert residue_of(7, 7, 3).value == 7
    with pytest.raises(NonUnitDenominator):
        residue_of(Fraction(1, 5), 5, 2)


def test_inverse_examples():
    assert unit_inverse(PadicResidue(2, 5, 2)).value == 13
    assert unit_inverse(PadicResidue(1, 7, 4)).value == 1
    with pytest.raises(NonUnit):
        unit_inverse(PadicResidue(5, 5, 2))


def test_teichmuller_examples():
    assert teichmuller_unit(PadicResidue(2, 5, 2)).value == 7
    assert teichmuller_unit(PadicResidue(1, 11, 3)).value == 1
    for p in (3, 5, 7):
        assert teichmuller_unit(PadicResidue(p - 1, p, 4)).value == p ** 4 - 1
    with pytest.raises(UnsupportedPrime):
        teichmuller_unit(PadicResidue(1, 2, 3))


def test_mult_order_examples():
    assert mult_order(5, 8) == 2
    assert mult_order(7, 9) == 3
    assert mult_order(4, 1) == 1
    with pytest.raises(NotCoprime):
        mult_order(3, 9)


def test_precision_mismatch_and_not_prime():
    with pytest.raises(PrecisionMismatch):
        PadicResidue(1, 5, 2) + PadicResidue(1, 5, 3)
    with pytest.raises(PrecisionMismatch):
        PadicResidue(1, 5, 2) * PadicResidue(1, 7, 2)
    with pytest.raises(NotPrime):
        ResidueRing(9, 2)
    with pytest.raises(NotPrime):
        padic_valuation(4, 6)


def test_parse_and_rings():
    assert parse_rational("−3/6") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    assert QQ(Fraction(3, 4)) == Fraction(3, 4)
    assert repr(GF(7)) == "GF(7)" and repr(ResidueRing(5, 3)) == "Z/5^3"
    assert p_free_part(5 ** 3 * 12, 5) == 12
    assert str(PadicResidue(13, 5, 2)) == "13 mod 5^2"
    assert PadicResidue(13, 5, 3).truncate(1).value == 3


rationals = st.fractions(max_denominator=10 ** 6).filter(lambda x: abs(x.numerator) < 10 ** 12)


@given(rationals, rationals, st.sampled_from(PRIMES), st.integers(1, 8))
def test_reduction_is_a_ring_homomorphism(x, y, p, mu):
    if x.denominator % p == 0 or y.denominator % p == 0:
        return
    rx, ry = residue_of(x, p, mu), residue_of(y, p, mu)
    assert residue_of(x + y, p, mu) == rx + ry
    assert residue_of(x * y, p, mu) == rx * ry
    assert residue_of(-x, p, mu) == -rx


@given(rationals, rationals, st.sampled_from(PRIMES))
def test_valuation_is_additive(x, y, p):
    if x == 0 or y == 0:
        return
    assert padic_valuation(x * y, p) == padic_valuation(x, p) + padic_valuation(y, p)
    assert padic_valuation(x + y, p) >= min(padic_valuation(x, p), padic_valuation(y, p))


@given(st.sampled_from(PRIMES), st.integers(1, 8), st.integers(1, 10 ** 9), st.integers(1, 10 ** 9))
def test_teichmuller_character(p, mu, a, b):
    A, B = PadicResidue(a, p, mu), PadicResidue(b, p, mu)
    if not (A.is_unit() and B.is_unit()):
        return
    ca, cb = teichmuller_unit(A), teichmuller_unit(B)
    assert ca.value % p == a % p
    assert ca ** (p - 1) == 1
    assert teichmuller_unit(A * B) == ca * cb
    # independent oracle: a^(p^(mu-1)) is already the lift
    assert ca.value == pow(a, p ** (mu - 1), p ** mu)


@given(st.sampled_from(PRIMES), st.integers(1, 6), st.integers(1, 10 ** 6))
def test_inverse_and_powers(p, mu, a):
    A = PadicResidue(a, p, mu)
    if not A.is_unit():
        return
    assert A * unit_inverse(A) == 1
    assert A ** -3 * A ** 3 == 1
    assert A / A == 1
