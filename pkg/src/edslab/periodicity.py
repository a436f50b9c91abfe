"""Periodicity of F_n(P) mod p: the rank r, the symmetry units a, b and the period rt.

For a point of exact order r >= 3 mod p,

    F_{kr+n}(P) = a^(kn) b^(k^2) F_n(P)           (k, n >= 0)

and for r = 2 the even terms vanish while F_{2k+1}(P) = a^k b^((k^2-k)/2).
Everything here runs on plain ints mod p for speed.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .curve import to_fp, point_order_fp
from .divpoly import NetContext, raw_division_values
from .errors import (
    BoundTooSmall,
    PeriodNotFound,
    SingularReduction,
    TrivialPoint,
    ZeroDenominator,
)
from .ring import PadicResidue


@dataclass(frozen=True)
class PeriodCertificate:
    p: int
    r: int
    t: int
    s: int
    period: int
    a: int
    b: int
    window: tuple
    mode: str  # "general" (r >= 3) or "r=2"

    @property
    def r2_mode(self) -> bool:
        return self.mode == "r=2"

    @property
    def s_equals_t(self) -> bool:
        return self.s == self.t

    def to_dict(self) -> dict:
        d = asdict(self)
        d["window"] = list(self.window)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> PeriodCertificate:
        d = dict(d)
        d["window"] = tuple(d["window"])
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> PeriodCertificate:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class SymmetryCheck:
    ok: bool
    counterexample: tuple | None = None  # (k, n, lhs, rhs)

    def __bool__(self):
        return self.ok


class _FpSequence:
    """Lazily extended list of F_n(P) mod p."""

    def __init__(self, ctx: NetContext, p: int):
        self.ctx, self.p = ctx, p
        self.values = []

    def upto(self, N: int):
        if len(self.values) <= N:
            c = self.ctx
            self.values = raw_division_values(c.ring, c.f2, c.f3, c.f4, max(N, 8))
        return self.values


def _setup(E, P, p, allow_bad_reduction=False):
    Ep, Pp = to_fp(E, P, p)
    if not allow_bad_reduction and not Ep.ring.is_unit(Ep.discriminant):
        raise SingularReduction(f"singular reduction at p = {p}")
    if Pp.is_zero:
        raise TrivialPoint(f"P reduces to O mod {p}")
    r = point_order_fp(Ep, Pp, p, allow_bad_reduction=allow_bad_reduction)
    return Ep, Pp, r, _FpSequence(NetContext.from_point(Ep, Pp), p)


def _symmetry_from_values(W, r, p):
    if r >= 3:
        den_a = W[2] * W[r + 1] % p
        den_b = W[r + 2] % p
        if den_a == 0 or den_b == 0:
            raise ZeroDenominator(f"F_2 F_(r+1) F_(r+2) vanishes mod {p} with r = {r}")
        a = W[r + 2] * pow(den_a, -1, p) % p
        b = W[2] * W[r + 1] ** 2 * pow(den_b, -1, p) % p
    else:
        a = W[3] % p
        if a == 0:
            raise ZeroDenominator(f"F_3 vanishes mod {p} with r = 2")
        b = W[5] * pow(a, -2, p) % p
    return a, b


def symmetry_constants(E, P, p: int):
    """The units (a, b) of F_p; for r = 2, a = F_3 and b = F_5 / a^2."""
    Ep, Pp, r, seq = _setup(E, P, p)
    a, b = _symmetry_from_values(seq.upto(r + 5), r, p)
    return PadicResidue(a, p, 1), PadicResidue(b, p, 1)


def symmetry_order(a: int, b: int, p: int, r: int) -> int:
    """Least t >= 1 making rt a period of the symmetry formula."""
    a, b = int(a) % p, int(b) % p
    limit = 2 * (p - 1) if r == 2 else p - 1
    for t in range(1, limit + 1):
        if r == 2:
            if pow(b, t, p) == 1 and pow(a, t, p) * pow(b, t * (t - 1) // 2, p) % p == 1:
                return t
        elif pow(a, t, p) == 1 and pow(b, t * t, p) == 1:
            return t
    raise PeriodNotFound(f"no symmetry order <= {limit}")


def rank_and_order(E, P, p: int, allow_bad_reduction: bool = False):
    """(r, t) for P mod p.

    ``allow_bad_reduction`` accepts p | disc when P mod p is a nonsingular point.
    """
    Ep, Pp, r, seq = _setup(E, P, p, allow_bad_reduction)
    a, b = _symmetry_from_values(seq.upto(r + 5), r, p)
    return r, symmetry_order(a, b, p, r)


def _verify(W, p, r, a, b, K_max, N_max) -> SymmetryCheck:
    if r == 2:
        for k in range(K_max + 1):
            if W[2 * k] % p:
                return SymmetryCheck(False, (k, 0, W[2 * k] % p, 0))
            rhs = pow(a, k, p) * pow(b, (k * k - k) // 2, p) % p
            if W[2 * k + 1] % p != rhs:
                return SymmetryCheck(False, (k, 1, W[2 * k + 1] % p, rhs))
        return SymmetryCheck(True)
    for k in range(K_max + 1):
        ak = pow(a, k, p)
        factor = pow(b, k * k, p)
        base = k * r
        for n in range(N_max + 1):
            rhs = factor * W[n] % p
            if W[base + n] % p != rhs:
                return SymmetryCheck(False, (k, n, W[base + n] % p, rhs))
            factor = factor * ak % p
    return SymmetryCheck(True)


def verify_symmetry(E, P, p: int, K_max: int, N_max: int) -> SymmetryCheck:
    """Check the symmetry identity on 0 <= k <= K_max, 0 <= n <= N_max.

    For r = 2 only k matters: F_{2k} = 0 and the odd-index formula are checked.
    """
    Ep, Pp, r, seq = _setup(E, P, p)
    W = seq.upto(max(r + 5, K_max * r + N_max, 2 * K_max + 1))
    a, b = _symmetry_from_values(W, r, p)
    return _verify(W, p, r, a, b, K_max, N_max)


def _is_period(W, ell, span) -> bool:
    return all(W[ell + n] == W[n] for n in range(span + 1))


def find_period(E, P, p: int, bound: int | None = None, K_max: int = 20,
                N_max: int | None = None) -> PeriodCertificate:
    """Minimal period of (F_n(P) mod p), certified on a window of length 2l + r.

    The symmetry identity is checked on the (K_max, N_max) window, N_max
    defaulting to rt.
    """
    Ep, Pp, r, seq = _setup(E, P, p)
    a, b = _symmetry_from_values(seq.upto(r + 5), r, p)
    t = symmetry_order(a, b, p, r)
    if bound is None:
        bound = 4 * r * t
    elif bound < 4 * r * t:
        raise BoundTooSmall(f"bound {bound} < 4rt = {4 * r * t}")

    ell = None
    W = seq.upto(3 * r * t + r)
    for cand in range(1, bound + 1):
        if 3 * cand + r >= len(W):
            W = seq.upto(3 * bound + r)
        if _is_period(W, cand, 2 * cand + r):
            ell = cand
            break
    if ell is None:
        raise PeriodNotFound(f"no period <= {bound} for p = {p}")
    if ell % r:
        raise PeriodNotFound(f"period {ell} is not a multiple of r = {r}")

    if N_max is None:
        N_max = r * t
    W = seq.upto(max(K_max * r + N_max, 2 * K_max + 1))
    check = _verify(W, p, r, a, b, K_max, N_max)
    if not check:
        raise PeriodNotFound(f"symmetry identity fails at {check.counterexample}")
    return PeriodCertificate(p=p, r=r, t=t, s=ell // r, period=ell, a=a, b=b,
                             window=(K_max, N_max),
                             mode="r=2" if r == 2 else "general")
