"""Division-polynomial values F_n(P) by the double-and-add block ladder.

F_2, F_3, F_4 come from the usual b-invariant closed forms; everything else
follows from

    F_{2n+1} = F_{n+2} F_n^3 - F_{n-1} F_{n+1}^3
    F_2 F_{2n} = F_n (F_{n+2} F_{n-1}^2 - F_{n-2} F_{n+1}^2)

extended to all integers by F_0 = 0, F_{-n} = -F_n.  A block holds the eight
values F_{i-3}, ..., F_{i+4}; one step maps the block at i to the block at
2i or 2i + 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import CurvePoint, WeierstrassCurve, scalar_mul
from .errors import NonUnitDivisor, PointAtInfinity
from .ring import QQ, PadicResidue


@dataclass(frozen=True)
class NetContext:
    ring: object
    f2: object
    f3: object
    f4: object
    curve: WeierstrassCurve | None = None
    point: CurvePoint | None = None

    @classmethod
    def from_point(cls, E: WeierstrassCurve, P: CurvePoint) -> NetContext:
        f2, f3, f4 = initial_division_values(E, P)
        return cls(E.ring, f2, f3, f4, E, P)

    @property
    def f1(self):
        return self.ring.one


def initial_division_values(E: WeierstrassCurve, P: CurvePoint):
    """(F_2, F_3, F_4) at an affine point."""
    if P.is_zero or not E.ring.is_unit(P.Z):
        raise PointAtInfinity("division values need an affine point")
    x, y = P.X, P.Y
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    f2 = 2 * y + E.a1 * x + E.a3
    f3 = (((3 * x + b2) * x + 3 * b4) * x + 3 * b6) * x + b8
    f4 = f2 * (((((2 * x + b2) * x + 5 * b4) * x + 10 * b6) * x + 10 * b8) * x * x
               + (b2 * b8 - b4 * b6) * x + (b4 * b8 - b6 * b6))
    return f2, f3, f4


class _Raw:
    """Plain-number arithmetic for the ladder: Fractions over Q, ints mod m otherwise."""

    def __init__(self, ring, f2, f3, f4):
        self.ring = ring
        if ring == QQ:
            self.mod = None
            vals = [Fraction(v) for v in (f2, f3, f4)]
            self.even_zero = vals[0] == 0
            self.inv2 = None if self.even_zero else 1 / vals[0]
        else:
            self.mod = ring.modulus
            vals = [int(v) for v in (f2, f3, f4)]
            self.even_zero = vals[0] == 0
            if self.even_zero:
                self.inv2 = None
            elif vals[0] % ring.prime == 0:
                self.inv2 = False
            else:
                self.inv2 = pow(vals[0], -1, self.mod)
        self.f2, self.f3, self.f4 = vals

    def red(self, v):
        return v if self.mod is None else v % self.mod

    def odd(self, wm1, w0, w1, w2):
        # F_{2n+1} from F_{n-1}, F_n, F_{n+1}, F_{n+2}
        return self.red(w2 * w0 ** 3 - wm1 * w1 ** 3)

    def even(self, wm2, wm1, w0, w1, w2):
        # F_{2n} from F_{n-2}, ..., F_{n+2}
        if self.even_zero:
            return 0
        if self.inv2 is False:
            raise NonUnitDivisor("F_2 is not a unit: the point has order 2 mod p")
        return self.red(w0 * (w2 * wm1 * wm1 - wm2 * w1 * w1) * self.inv2)

    def wrap(self, v):
        if self.mod is None:
            return Fraction(v)
        return PadicResidue(v % self.mod, self.ring.prime, self.ring.precision)

    def first_block(self):
        f2, f3, f4 = self.f2, self.f3, self.f4
        f5 = self.red(f4 * f2 ** 3 - f3 ** 3)
        return [self.red(-f2), self.red(-1), 0, 1, f2, f3, f4, f5]


def _step(raw: _Raw, block, i: int, c: int):
    lo = i - 3

    def W(j):
        return block[j - lo]

    out = []
    for t in range(c - 3, c + 5):
        if t % 2:
            n = (t - 1) // 2
            out.append(raw.odd(W(n - 1), W(n), W(n + 1), W(n + 2)))
        else:
            n = t // 2
            out.append(raw.even(W(n - 2), W(n - 1), W(n), W(n + 1), W(n + 2)))
    return out


def _ladder(raw: _Raw, n: int):
    """Raw F_n for n >= 1."""
    block, i = raw.first_block(), 1
    for bit in bin(n)[3:]:
        c = 2 * i + (bit == "1")
        block, i = _step(raw, block, i, c), c
    return block[3]


def net_block(ctx: NetContext, i: int):
    """The eight values F_{i-3}, ..., F_{i+4} reached by the ladder (i >= 1)."""
    raw = _Raw(ctx.ring, ctx.f2, ctx.f3, ctx.f4)
    block, j = raw.first_block(), 1
    for bit in bin(i)[3:]:
        c = 2 * j + (bit == "1")
        block, j = _step(raw, block, j, c), c
    return [raw.wrap(v) for v in block]


def eval_division_value(ctx: NetContext, n: int):
    """F_n(P) in the context's ring, using O(log n) ring operations."""
    raw = _Raw(ctx.ring, ctx.f2, ctx.f3, ctx.f4)
    if n == 0:
        return raw.wrap(0)
    if n < 0:
        return -eval_division_value(ctx, -n)
    if n <= 5:
        # F_{-2}..F_5 need no division
        return raw.wrap(raw.first_block()[n + 2])
    return raw.wrap(_ladder(raw, n))


def raw_division_values(ring, f2, f3, f4, N: int):
    """F_0..F_N bottom-up as plain numbers (Fractions, or ints reduced mod p^mu)."""
    raw = _Raw(ring, f2, f3, f4)
    W = [0, 1, raw.f2, raw.f3, raw.f4][: N + 1]
    for t in range(5, N + 1):
        if t % 2:
            n = (t - 1) // 2
            W.append(raw.odd(W[n - 1], W[n], W[n + 1], W[n + 2]))
        else:
            n = t // 2
            W.append(raw.even(W[n - 2], W[n - 1], W[n], W[n + 1], W[n + 2]))
    return W


def division_values(ctx: NetContext, N: int):
    """F_0..F_N bottom-up, as ring elements."""
    raw = _Raw(ctx.ring, ctx.f2, ctx.f3, ctx.f4)
    return [raw.wrap(v) for v in raw_division_values(ctx.ring, ctx.f2, ctx.f3, ctx.f4, N)]


def chain_rule_residuals(ctx: NetContext, m: int, ns):
    """F_{mn}(P) - F_n([m]P) * F_m(P)^(n^2) for each n in ``ns``.

    Returns ``None`` when [m]P is O modulo the maximal ideal, where the right
    side is not defined through an affine point and the identity holds trivially.
    """
    E, P = ctx.curve, ctx.point
    if E is None:
        raise ValueError("chain rule needs a context built from a curve point")
    mP = scalar_mul(E, m, P)
    if mP.is_zero or not E.ring.is_unit(mP.Z):
        return None
    fm = eval_division_value(ctx, m)
    inner = NetContext.from_point(E, mP)
    return [eval_division_value(ctx, m * n) - eval_division_value(inner, n) * fm ** (n * n)
            for n in ns]


def chain_rule_residual(ctx: NetContext, m: int, n: int):
    """Single-pair form of ``chain_rule_residuals``."""
    res = chain_rule_residuals(ctx, m, [n])
    return None if res is None else res[0]
