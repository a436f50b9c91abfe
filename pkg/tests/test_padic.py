import pytest
from hypothesis import given, settings, strategies as st

from edslab.curve import WeierstrassCurve, reduce_point, scalar_mul
from edslab.divpoly import NetContext, division_values, eval_division_value
from edslab.errors import (
    DegenerateValuation, OrderDivisibleByP, OrderTwo, PEqualsTwo, SingularReduction,
    SupersingularReduction,
)
from edslab.padic import (
    LimitCertificate, choose_q, kernel_valuation_check, lambda_for, limit_sequence, padic_limit,
    shipsey_consistency, teichmuller_point, verify_period_mod_pmu,
)
from edslab.ring import padic_valuation


def test_lambda_examples():
    assert lambda_for(2, 1, 5) == 1
    assert lambda_for(5, 1, 7) == 4
    assert lambda_for(3, 2, 3) == 1
    assert lambda_for(1, 1, 3) == 1


@given(st.integers(1, 12), st.sampled_from([3, 5, 7, 11, 101]))
def test_lambda_unramified(mu, p):
    assert lambda_for(mu, 1, p) == max(1, mu - 1)


@given(st.integers(1, 12), st.integers(1, 4), st.sampled_from([3, 5, 7]))
def test_lambda_is_least(mu, e, p):
    lam = lambda_for(mu, e, p)

    def ok(L):
        return min((L - i) * e + p ** i for i in range(L + 1)) >= mu
    assert ok(lam) and all(not ok(L) for L in range(1, lam))


def test_choose_q():
    assert choose_q(5, 1, 1) == 1
    assert choose_q(5, 8, 1) == 2
    assert choose_q(7, 9, 1) == 3
    assert pow(7, choose_q(7, 9, 6), 54) == 1


def test_teichmuller_point(e37):
    E, P = e37
    E3 = E.reduce(7, 3)
    Q = reduce_point(E, P, 7, 3)
    T = teichmuller_point(E3, Q, 7, 3)
    assert scalar_mul(E3, 9, T).is_zero
    assert reduce_point(E3, T, 7, 1) == reduce_point(E3, Q, 7, 1)
    # T is torsion, so it is its own lift
    assert teichmuller_point(E3, T, 7, 3) == T
    # a point in the kernel of reduction lifts to O
    K = scalar_mul(E3, 9, Q)
    assert teichmuller_point(E3, K, 7, 3).is_zero
    with pytest.raises(PEqualsTwo):
        teichmuller_point(E.reduce(2, 3), reduce_point(E, P, 2, 3), 2, 3)


def test_teichmuller_point_order_divisible_by_p():
    # (3, 4) on y^2 = x^3 - 2x - 5 has order 10 mod 5
    E2 = WeierstrassCurve(0, 0, 0, -2, -5)
    P2 = E2.point(3, 4)
    E5 = E2.reduce(5, 2)
    with pytest.raises(OrderDivisibleByP):
        teichmuller_point(E5, reduce_point(E2, P2, 5, 2), 5, 2)


def test_limit_examples(e37):
    E, P = e37
    c9 = padic_limit(E, P, 7, 9, 4)
    assert c9.vanishing and c9.value == 0
    c1 = padic_limit(E, P, 7, 1, 4)
    assert not c1.vanishing and c1.crosscheck and c1.k_stable >= lambda_for(4, 1, 7) + 1
    assert (c1.r, c1.r_prime, c1.t) == (9, 9, 6)
    assert pow(7, c1.e, 54) == 1 and c1.q == 7 ** c1.e
    # independent re-run at a higher precision truncates to the same value
    assert padic_limit(E, P, 7, 1, 5).value.truncate(4) == c1.value
    assert LimitCertificate.from_json(c1.to_json()) == c1


def test_limit_gates(e37):
    E, P = e37
    with pytest.raises(SupersingularReduction):
        padic_limit(E, P, 3, 1, 3)
    with pytest.raises(SingularReduction):
        padic_limit(E, P, 37, 1, 3)
    with pytest.raises(PEqualsTwo):
        padic_limit(E, P, 2, 1, 3)
    # (1, 7) on y^2 = x^3 + 48 has y = 0 mod 7, so order 2 there
    E2 = WeierstrassCurve(0, 0, 0, 0, 48)
    with pytest.raises(OrderTwo):
        padic_limit(E2, E2.point(1, 7), 7, 1, 2)


def test_bad_but_admissible_prime(e37):
    E, P = e37
    c = padic_limit(E, P, 37, 1, 3, allow_bad_reduction=True)
    assert c.r == 38 and c.crosscheck and not c.vanishing
    assert padic_limit(E, P, 37, 38, 3, allow_bad_reduction=True).vanishing


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 20), st.integers(1, 5), st.sampled_from([5, 7, 11, 13]))
def test_stabilization_properties(m, mu, p):
    E = WeierstrassCurve(0, 0, 1, -1, 0)
    P = E.point(0, 0)
    c = padic_limit(E, P, p, m, mu)
    assert c.crosscheck
    assert c.vanishing == (m % c.r_prime == 0)
    assert c.vanishing == (c.value == 0)
    assert (c.q - 1) % (c.r_prime * c.t) == 0
    fm = eval_division_value(NetContext.from_point(E.reduce(p), reduce_point(E, P, p, 1)), m).value
    seq = limit_sequence(E, P, p, m, mu + 1, c.q, c.k_stable + 2)
    assert all(A.value % p == fm for A in seq)
    # p-adic distance between consecutive terms does not grow past lambda
    dists = [padic_valuation((seq[k + 1] - seq[k]).value, p) for k in range(len(seq) - 1)]
    lam = lambda_for(mu, 1, p)
    tail = dists[lam:]
    assert all(b >= a for a, b in zip(tail, tail[1:]))


def test_mixed_order_divisible_by_p():
    """r = 10 at p = 5: the limit vanishes exactly when the p-free part 2 divides m."""
    E = WeierstrassCurve(0, 0, 0, -2, -5)
    P = E.point(3, 4)
    for m in range(1, 11):
        c = padic_limit(E, P, 5, m, 3)
        assert (c.r, c.r_prime) == (10, 2)
        assert c.crosscheck
        assert c.vanishing == (m % 2 == 0)


def test_valuation_of_multiples_of_r(e37):
    """ord_p F_{rn}(P) - ord_p(n) stays bounded for n <= 200."""
    E, P = e37
    for p, r in ((5, 8), (7, 9)):
        mu = 10
        F = division_values(NetContext.from_point(E.reduce(p, mu), reduce_point(E, P, p, mu)), 200 * r)
        diffs = {padic_valuation(F[r * n].value, p) - padic_valuation(n, p) for n in range(1, 201)}
        assert max(diffs) < mu - 2
        assert diffs == {1}


def test_period_mod_pmu(e37):
    E, P = e37
    rep = verify_period_mod_pmu(E, P, 5, 2, 30)
    assert rep.passed and rep.divisor == 20 and rep.lam == 1
    assert verify_period_mod_pmu(E, P, 7, 3, 20).divisor == 294
    assert verify_period_mod_pmu(E, P, 7, 3, 20).passed
    # mod p every F_{kr} vanishes, so the period collapses to 1
    one = verify_period_mod_pmu(E, P, 7, 1, 20)
    assert one.passed and one.observed_period == 1


def test_cross_ratio(e37):
    E, P = e37
    assert shipsey_consistency(E, P, 5, 8)
    assert shipsey_consistency(E, P, 7, 6)
    # (-1, 2) on y^2 = x^3 - 4x + 1 has order 3 mod 7 with 7^2 | F_3(P)
    E2 = WeierstrassCurve(0, 0, 0, -4, 1)
    with pytest.raises(DegenerateValuation):
        shipsey_consistency(E2, E2.point(-1, 2), 7, 6)


def test_kernel_bound(e37):
    E, P = e37
    assert kernel_valuation_check(E, P, 5, 1)
    assert kernel_valuation_check(E, P, 5, 3)
    assert kernel_valuation_check(E, P, 7, 2)
    # [r]P alone is only divisible once; z([r]P) is not 0 mod p^2
    R = scalar_mul(E.reduce(7, 2), 9, reduce_point(E, P, 7, 2))
    assert R.z_coordinate().value % 7 == 0 and R.z_coordinate().value % 49 != 0
