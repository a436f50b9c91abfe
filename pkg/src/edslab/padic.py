"""p-adic behaviour of F_n(P): Teichmuller points, the limits lim F_{mq^k}(P),
periodicity of F_{kr}(P) mod p^mu and the formal-group valuation bound.

All p-adic quantities are residues mod p^mu.  A limit is declared stable once
three consecutive terms agree past the lambda threshold, and the whole run is
repeated at precision mu + 1 as a cross-check.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .curve import (
    CurvePoint,
    WeierstrassCurve,
    has_good_reduction,
    is_supersingular,
    point_order_fp,
    reduce_point,
    scalar_mul,
)
from .divpoly import NetContext, eval_division_value, raw_division_values
from .errors import (
    ConvergenceError,
    DegenerateValuation,
    OrderDivisibleByP,
    OrderTwo,
    PEqualsTwo,
    SupersingularReduction,
)
from .periodicity import rank_and_order
from .ring import (
    QQ,
    PadicResidue,
    _require_prime,
    mult_order,
    p_free_part,
    padic_valuation,
    residue_of,
)


def lambda_for(mu: int, e: int, p: int) -> int:
    """Least positive lambda with min over 0 <= i <= lambda of (lambda - i) e + p^i >= mu."""
    if mu < 1 or e < 1 or p < 3:
        raise ValueError("need mu >= 1, e >= 1, p >= 3")
    lam = 1
    while min((lam - i) * e + p ** i for i in range(lam + 1)) < mu:
        lam += 1
    return lam


def choose_q(p: int, r_prime: int, t: int) -> int:
    """Exponent e with q = p^e = 1 mod r' t (the least one)."""
    return mult_order(p, r_prime * t)


@dataclass(frozen=True)
class LimitCertificate:
    p: int
    m: int
    mu: int
    e: int
    q: int
    r: int
    r_prime: int
    t: int
    value: PadicResidue
    k_stable: int
    vanishing: bool
    crosscheck: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p, "m": self.m, "mu": self.mu, "e": self.e, "q": self.q,
            "r": self.r, "r_prime": self.r_prime, "t": self.t,
            "value": self.value.value, "k_stable": self.k_stable,
            "vanishing": self.vanishing, "crosscheck": self.crosscheck,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> LimitCertificate:
        d = dict(d)
        d["value"] = PadicResidue(d["value"], d["p"], d["mu"])
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> LimitCertificate:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class PmuPeriodReport:
    mu: int
    lam: int
    divisor: int          # p^lambda (p - 1)
    window: int           # k ranges over 0..window
    passed: bool
    observed_period: int | None = None  # least d | divisor that works on the window

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _gate(E, P, p, allow_bad_reduction=False, reject_r2=True):
    """Hypotheses shared by the limit and period routines; returns (r, t)."""
    if p == 2:
        raise PEqualsTwo("p = 2 is excluded")
    _require_prime(p)
    r, t = rank_and_order(E, P, p, allow_bad_reduction=allow_bad_reduction)
    # supersingularity only makes sense for good reduction
    if has_good_reduction(E, p) and is_supersingular(E, p):
        raise SupersingularReduction(f"supersingular reduction at p = {p}")
    if r == 2 and reject_r2:
        raise OrderTwo("P has order 2 mod p; the net evaluator needs r >= 3")
    return r, t


def _local_context(E, P, p, mu) -> NetContext:
    return NetContext.from_point(E.reduce(p, mu), reduce_point(E, P, p, mu))


def limit_sequence(E, P, p: int, m: int, mu: int, q: int, K: int):
    """A_0, ..., A_K with A_k = F_{m q^k}(P) mod p^mu."""
    ctx = _local_context(E, P, p, mu)
    return [eval_division_value(ctx, m * q ** k) for k in range(K + 1)]


def _stabilize(ctx, m, q, lam, k_max):
    history = []
    for k in range(k_max + 1):
        history.append(eval_division_value(ctx, m * q ** k))
        if k >= lam + 1 and len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            return history[-1], k
    raise ConvergenceError(f"F_(m q^k) did not stabilize by k = {k_max}")


def padic_limit(E, P, p: int, m: int, mu: int, k_max: int | None = None,
                allow_bad_reduction: bool = False) -> LimitCertificate:
    """The limit of F_{m q^k}(P) in Z/p^mu, with q = p^e = 1 mod r' t.

    ``allow_bad_reduction`` admits p | disc when P mod p is nonsingular (the
    EDS admissibility gates do not exclude such primes).
    """
    if m < 1 or mu < 1:
        raise ValueError("need m >= 1 and mu >= 1")
    r, t = _gate(E, P, p, allow_bad_reduction)
    r_prime = p_free_part(r, p)
    e = choose_q(p, r_prime, t)
    q = p ** e
    lam = lambda_for(mu, 1, p)
    if k_max is None:
        k_max = 4 * mu + lam + 12
    value, k_stable = _stabilize(_local_context(E, P, p, mu), m, q, lam, k_max)
    finer, _ = _stabilize(_local_context(E, P, p, mu + 1), m, q, lambda_for(mu + 1, 1, p), k_max + 4)
    return LimitCertificate(
        p=p, m=m, mu=mu, e=e, q=q, r=r, r_prime=r_prime, t=t, value=value,
        k_stable=k_stable, vanishing=value == 0,
        crosscheck=finer.truncate(mu) == value,
    )


def teichmuller_point(E: WeierstrassCurve, Q: CurvePoint, p: int, mu: int) -> CurvePoint:
    """The torsion point T = Q mod p with [tau]T = O mod p^mu, tau the order of Q mod p.

    Q and E live over Z/p^mu.  T is the fixed point of Q -> [p^e]Q with p^e = 1 mod tau.
    """
    if p == 2:
        raise PEqualsTwo("p = 2 is excluded")
    Ep1, Q1 = E.reduce(p, 1), reduce_point(E, Q, p, 1)
    tau = point_order_fp(Ep1, Q1, p)
    if tau % p == 0:
        raise OrderDivisibleByP(f"order {tau} of Q mod {p} is divisible by p")
    if tau == 1:
        return E.zero
    step = p ** mult_order(p, tau)
    T = Q
    for _ in range(4 * mu + 8):
        T2 = scalar_mul(E, step, T)
        if T2 == T:
            return T
        T = T2
    raise ConvergenceError("Teichmuller iteration did not settle")


def verify_period_mod_pmu(E, P, p: int, mu: int, window: int) -> PmuPeriodReport:
    """Check that F_{(k+l)r}(P) = F_{kr}(P) mod p^mu for 0 <= k <= window, l = p^lambda (p-1)."""
    r, _ = _gate(E, P, p)
    lam = lambda_for(mu, 1, p)
    ell = p ** lam * (p - 1)
    ctx = _local_context(E, P, p, mu)
    W = raw_division_values(ctx.ring, ctx.f2, ctx.f3, ctx.f4, (window + ell) * r)
    sub = [W[k * r] for k in range(window + ell + 1)]

    def works(d):
        return all(sub[k + d] == sub[k] for k in range(window + ell + 1 - d))

    passed = all(sub[k + ell] == sub[k] for k in range(window + 1))
    observed = None
    if passed:
        observed = min(d for d in range(1, ell + 1) if ell % d == 0 and works(d))
    return PmuPeriodReport(mu=mu, lam=lam, divisor=ell, window=window,
                           passed=passed, observed_period=observed)


def shipsey_consistency(E, P, p: int, k_max: int) -> bool:
    """The alpha-free form of F_{kr}(P) = k alpha^(k^2-1) F_r(P) mod p^2.

    With S_k = F_{kr}(P) / F_r(P) (exact over Q, then reduced mod p) it checks
    (S_j / j)^(k^2-1) = (S_k / k)^(j^2-1) mod p for 2 <= j < k <= k_max, p not
    dividing jk.  Needs ord_p F_r(P) = 1; otherwise raises DegenerateValuation.
    """
    r, _ = _gate(E, P, p)
    ctx = NetContext.from_point(E, P)
    W = raw_division_values(QQ, ctx.f2, ctx.f3, ctx.f4, k_max * r)
    Fr = W[r]
    v = padic_valuation(Fr, p)
    if v != 1:
        raise DegenerateValuation(f"ord_{p} F_r(P) = {v}, the congruence is void")
    ks = [k for k in range(2, k_max + 1) if k % p]
    T = {k: residue_of(Fraction(W[k * r]) / Fr / k, p, 1).value for k in ks}
    return all(pow(T[j], k * k - 1, p) == pow(T[k], j * j - 1, p)
               for j, k in combinations(ks, 2))


def kernel_valuation_check(E, P, p: int, mu: int) -> bool:
    """z([p^lambda]([r]P)) = 0 mod p^mu, with arithmetic at precision mu + lambda."""
    lam = lambda_for(mu, 1, p)
    r = point_order_fp(E, P, p)
    prec = mu + lam
    Ep = E.reduce(p, prec)
    R = scalar_mul(Ep, r, reduce_point(E, P, p, prec))
    S = scalar_mul(Ep, p ** lam, R)
    if S.is_zero:
        return True
    return S.z_coordinate().value % p ** mu == 0
