"""Elliptic divisibility sequences.

An EDS is fixed by W_2, W_3, W_4 (W_0 = 0, W_1 = 1).  Terms are produced by the
odd/even duplication relations, with the division by W_2 checked exact.  An
EDS may carry an attached curve, point and scale gamma with
W_n = gamma^(n^2 - 1) F_n(P).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .curve import (
    CurvePoint,
    WeierstrassCurve,
    has_good_reduction,
    is_singular_point_mod_p,
    is_supersingular,
    point_order_fp,
    reduce_point,
)
from .divpoly import initial_division_values
from .errors import (
    ImproperResult,
    InadmissiblePrime,
    NonIntegralPoint,
    NonIntegralStep,
    NonUnitDenominator,
)
from .padic import LimitCertificate, padic_limit
from .ring import QQ, padic_valuation, residue_of, teichmuller_unit


def is_proper(w0, w1, w2, w3, w4) -> bool:
    return w0 == 0 and w1 == 1 and w2 * w3 != 0 and w4 % w2 == 0


def discriminant(w2: int, w3: int, w4: int) -> int:
    return (w4 * w2 ** 15 - w3 ** 3 * w2 ** 12 + 3 * w4 ** 2 * w2 ** 10
            - 20 * w4 * w3 ** 3 * w2 ** 7 + 3 * w4 ** 3 * w2 ** 5
            + 16 * w3 ** 6 * w2 ** 4 + 8 * w4 ** 2 * w3 ** 3 * w2 ** 2 + w4 ** 4)


@dataclass(frozen=True, eq=False)
class Eds:
    w2: int
    w3: int
    w4: int
    curve: WeierstrassCurve | None = None
    point: CurvePoint | None = None
    gamma: Fraction | None = None
    _terms: list = field(default_factory=list, repr=False)

    @property
    def proper(self) -> bool:
        return is_proper(0, 1, self.w2, self.w3, self.w4)

    @property
    def attached(self) -> bool:
        return self.curve is not None

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return -self[-n]
        return generate(self, n)[n]

    def __eq__(self, other):
        return isinstance(other, Eds) and (self.w2, self.w3, self.w4) == (other.w2, other.w3, other.w4)

    def __hash__(self):
        return hash((self.w2, self.w3, self.w4))

    @classmethod
    def with_scale(cls, E: WeierstrassCurve, P: CurvePoint, gamma) -> Eds:
        """The EDS W_n = gamma^(n^2-1) F_n(P); its first terms must be integers."""
        gamma = Fraction(gamma)
        if gamma == 0:
            raise ValueError("gamma must be nonzero")
        f2, f3, f4 = initial_division_values(E, P)
        ws = [gamma ** 3 * f2, gamma ** 8 * f3, gamma ** 15 * f4]
        if any(Fraction(w).denominator != 1 for w in ws):
            raise ImproperResult("gamma^(n^2-1) F_n(P) is not integral for n <= 4")
        W = cls(*(int(w) for w in ws), curve=E, point=P, gamma=gamma)
        if not W.proper:
            raise ImproperResult(f"({W.w2}, {W.w3}, {W.w4}) is not a proper EDS")
        return W


def generate(W: Eds, N: int) -> list:
    """W_0, ..., W_N as integers (cached)."""
    if not W.proper:
        raise ImproperResult(f"({W.w2}, {W.w3}, {W.w4}) is not a proper EDS")
    t = W._terms
    if not t:
        t.extend([0, 1, W.w2, W.w3, W.w4])
    while len(t) <= N:
        k = len(t)
        n = k // 2
        if k % 2:
            t.append(t[n + 2] * t[n] ** 3 - t[n - 1] * t[n + 1] ** 3)
        else:
            num = t[n] * (t[n + 2] * t[n - 1] ** 2 - t[n - 2] * t[n + 1] ** 2)
            q, rem = divmod(num, W.w2)
            if rem:
                raise NonIntegralStep(f"W_2 does not divide the numerator of W_{k}")
            t.append(q)
    return t[: N + 1]


def check_recursion(W: Eds, M: int) -> bool:
    """W_{m+n} W_{m-n} = W_{m+1} W_{m-1} W_n^2 - W_{n+1} W_{n-1} W_m^2 for m >= n >= 1, m + n <= M."""
    t = generate(W, M)
    for n in range(1, M // 2 + 1):
        for m in range(n, M - n + 1):
            if t[m + n] * t[m - n] != t[m + 1] * t[m - 1] * t[n] ** 2 - t[n + 1] * t[n - 1] * t[m] ** 2:
                return False
    return True


def divisibility_check(W: Eds, M: int) -> bool:
    """W_m | W_n whenever m | n <= M."""
    t = generate(W, M)
    for m in range(1, M + 1):
        for n in range(2 * m, M + 1, m):
            if t[m] == 0:
                if t[n] != 0:
                    return False
            elif t[n] % t[m]:
                return False
    return True


def from_curve_point(E: WeierstrassCurve, P: CurvePoint) -> Eds:
    """W_n = F_n(P) for an integral point on an integral model (scale 1)."""
    if E.ring != QQ or any(Fraction(a).denominator != 1 for a in E.a_invariants):
        raise ImproperResult("need an integral Weierstrass model over Q")
    if P.is_zero or any(Fraction(c).denominator != 1 for c in P.xy()):
        raise NonIntegralPoint(f"{P} is not an integral affine point")
    f2, f3, f4 = (int(v) for v in initial_division_values(E, P))
    W = Eds(f2, f3, f4, curve=E, point=P, gamma=Fraction(1))
    if not W.proper:
        raise ImproperResult(f"F_2, F_3, F_4 = ({f2}, {f3}, {f4}) is not a proper EDS")
    return W


@dataclass(frozen=True)
class PrimeClassification:
    p: int
    is_two: bool
    point_at_O: bool
    singular_point: bool
    supersingular: bool

    @property
    def admissible(self) -> bool:
        return not (self.is_two or self.point_at_O or self.singular_point or self.supersingular)

    @property
    def reasons(self) -> list:
        names = {"is_two": "p = 2", "point_at_O": "P reduces to O",
                 "singular_point": "P reduces to a singular point",
                 "supersingular": "supersingular reduction"}
        return [text for flag, text in names.items() if getattr(self, flag)]

    def to_dict(self) -> dict:
        return {"p": self.p, "is_two": self.is_two, "point_at_O": self.point_at_O,
                "singular_point": self.singular_point, "supersingular": self.supersingular,
                "admissible": self.admissible}


def _require_attached(W: Eds):
    if not W.attached:
        raise ValueError("this operation needs an EDS with an attached curve and point")


def classify_prime(W: Eds, p: int) -> PrimeClassification:
    _require_attached(W)
    E, P = W.curve, W.point
    at_O = reduce_point(E, P, p, 1).is_zero
    good = has_good_reduction(E, p)
    return PrimeClassification(
        p=p,
        is_two=p == 2,
        point_at_O=at_O,
        singular_point=not at_O and is_singular_point_mod_p(E, P, p),
        # supersingularity is a property of elliptic curves, so only at good primes
        supersingular=good and is_supersingular(E, p),
    )


def _gamma_valuation(W: Eds, p: int):
    g = W.gamma if W.gamma is not None else Fraction(1)
    v = padic_valuation(g, p)
    if v < 0:
        raise NonUnitDenominator(f"gamma = {g} is not {p}-integral")
    return g, v


def eds_padic_limit(W: Eds, p: int, m: int, mu: int) -> LimitCertificate:
    """lim W_{m q^k} in Z/p^mu.

    With W_n = gamma^(n^2-1) F_n(P) and gamma a p-adic unit, gamma^(m^2 q^(2k))
    tends to chi(gamma)^(m^2), so the limit is chi(gamma)^(m^2) gamma^-1 times the
    limit of F_{m q^k}(P).  If p | gamma the limit is 0.
    """
    _require_attached(W)
    cls = classify_prime(W, p)
    if not cls.admissible:
        raise InadmissiblePrime(f"p = {p} refused: {', '.join(cls.reasons)}", classification=cls)
    g, v = _gamma_valuation(W, p)
    base = padic_limit(W.curve, W.point, p, m, mu, allow_bad_reduction=True)
    if v > 0:
        zero = residue_of(0, p, mu)
        return LimitCertificate(**{**base.__dict__, "value": zero, "vanishing": True})
    gr = residue_of(g, p, mu)
    value = teichmuller_unit(gr) ** (m * m) * gr ** -1 * base.value
    return LimitCertificate(**{**base.__dict__, "value": value, "vanishing": value == 0})


def vanishing_predict(W: Eds, p: int, m: int) -> bool:
    """Whether lim W_{m q^k} = 0: p | gamma, or the order r_p of P mod p divides m p."""
    _require_attached(W)
    _, v = _gamma_valuation(W, p)
    if v > 0:
        return True
    r = point_order_fp(W.curve, W.point, p, allow_bad_reduction=True)
    return (m * p) % r == 0


def eds_to_json(W: Eds, N: int) -> str:
    return json.dumps({"w": [W.w2, W.w3, W.w4], "terms": generate(W, N)})
