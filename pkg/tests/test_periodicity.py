import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import primerange

from edslab.acceptance import random_fp_case
from edslab.curve import WeierstrassCurve
from edslab.divpoly import NetContext, division_values
from edslab.errors import BoundTooSmall, SingularReduction, TrivialPoint
from edslab.periodicity import (
    PeriodCertificate, find_period, rank_and_order, symmetry_constants, symmetry_order,
    verify_symmetry,
)


def reduced_values(E, P, p, N):
    F = division_values(NetContext.from_point(E, P), N)
    return [int(v) % p for v in F]


def brute_period(seq):
    """Least l with seq[n + l] = seq[n] on the available range (at least twice over)."""
    for ell in range(1, len(seq) // 3):
        if all(seq[n + ell] == seq[n] for n in range(len(seq) - ell)):
            return ell
    return None


@pytest.mark.parametrize("p,r,t", [(5, 8, 4), (7, 9, 6)])
def test_conductor37_certificates(e37, p, r, t):
    E, P = e37
    cert = find_period(E, P, p)
    assert (cert.r, cert.t) == (r, t)
    assert cert.period % r == 0 and t % cert.s == 0
    assert cert.period == brute_period(reduced_values(E, P, p, 6 * r * t))


def test_symmetry_constants_example(e37):
    E, P = e37
    a, b = symmetry_constants(E, P, 5)
    F = reduced_values(E, P, 5, 12)
    assert (a * F[2] * F[9]).value == F[10] % 5
    assert (b * F[10]).value == F[2] * F[9] ** 2 % 5
    assert (a * b).value == F[9]
    assert verify_symmetry(E, P, 5, 10, 20)
    assert verify_symmetry(E, P, 5, 0, 20)


def test_order_two_mode():
    E = WeierstrassCurve(0, 0, 0, 1, 3)
    for p in (5, 7, 11):
        pts = [(x, 0) for x in range(p) if (x ** 3 + x + 3) % p == 0]
        if not pts:
            continue
        Ep = E.reduce(p)
        P = Ep.point(*pts[0])
        cert = find_period(Ep, P, p)
        assert cert.r == 2 and cert.r2_mode
        a, _ = symmetry_constants(Ep, P, p)
        F = division_values(NetContext.from_point(Ep, P), 5)
        assert a == F[3]
        assert (2 * p - 2) % cert.t == 0


def test_gates(e37):
    E, P = e37
    with pytest.raises(SingularReduction):
        find_period(E, P, 37)
    with pytest.raises(TrivialPoint):
        find_period(E, E.zero, 5)
    with pytest.raises(BoundTooSmall):
        find_period(E, P, 5, bound=10)


def test_certificate_json_roundtrip(e37):
    cert = find_period(*e37, 7)
    assert PeriodCertificate.from_json(cert.to_json()) == cert


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(list(primerange(3, 98))), st.integers(0, 10 ** 6), st.booleans())
def test_random_certificates(p, seed, order_two):
    rng = random.Random(seed)
    E, P = random_fp_case(rng, p, order_two=order_two and seed % 4 == 0)
    cert = find_period(E, P, p, K_max=20)
    assert cert.period == cert.r * cert.s and cert.t % cert.s == 0
    assert (2 * p - 2 if cert.r == 2 else p - 1) % cert.t == 0
    # independent check: the least period of the raw sequence
    seq = [int(v) for v in division_values(NetContext.from_point(E, P), 4 * cert.period + 8)]
    assert brute_period(seq) == cert.period
    assert seq[cert.period] == 0
    assert rank_and_order(E, P, p) == (cert.r, cert.t)


def test_symmetry_order_small():
    # a = b = 1 gives t = 1
    assert symmetry_order(1, 1, 7, 5) == 1
    assert symmetry_order(6, 1, 7, 5) == 2
