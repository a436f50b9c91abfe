"""Weierstrass curves and their group law over Q, F_p and Z/p^mu.

Points are projective triples, normalized so that Z = 1 when Z is a unit and
Y = 1 otherwise; O is (0 : 1 : 0).

Addition over a local ring never divides by a non-unit.  It splits on the
reductions of the two summands:

* P != Q mod p: the projective chord.  For the cubic form F the third point on
  the line through P and Q is (grad F(Q).P) P - (grad F(P).Q) Q, which is
  primitive whenever P and Q are distinct nonsingular points mod p.
* P == Q != O mod p: affine chord/tangent with the symmetric slope
  g/s (or its inverse s/g when the sum lands in the kernel of reduction).
* P == Q == O mod p: the formal group law in the (z, w) = (-x/y, -1/y) chart.

Every branch is the exact chord computation on any lift to Z_p, so the
result is the group sum in E(Z/p^mu).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadCoefficients,
    NotOnCurve,
    RingMismatch,
    SingularReduction,
)
from .ring import QQ, GF, ResidueRing, padic_valuation, parse_rational


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: object
    a2: object
    a3: object
    a4: object
    a6: object
    ring: object = QQ

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, self.ring(getattr(self, name)))

    @property
    def a_invariants(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.a_invariants
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def zero(self) -> CurvePoint:
        r = self.ring
        return CurvePoint(r.zero, r.one, r.zero)

    def point(self, x, y) -> CurvePoint:
        r = self.ring
        P = CurvePoint(r(x), r(y), r.one)
        if not on_curve(self, P):
            raise NotOnCurve(f"({x}, {y}) is not on {self}")
        return P

    def reduce(self, p: int, mu: int = 1) -> WeierstrassCurve:
        """The same equation over Z/p^mu."""
        if self.ring != QQ:
            if self.ring.prime == p and self.ring.precision >= mu:
                return WeierstrassCurve(*(c.truncate(mu) for c in self.a_invariants),
                                        ring=ResidueRing(p, mu))
            raise RingMismatch(f"cannot reduce a curve over {self.ring!r} mod {p}^{mu}")
        for c in self.a_invariants:
            if padic_valuation(c, p) < 0:
                raise BadCoefficients(f"coefficient {c} is not {p}-integral")
        R = ResidueRing(p, mu)
        return WeierstrassCurve(*self.a_invariants, ring=R)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.a_invariants) + f"] over {self.ring!r}"


@dataclass(frozen=True)
class CurvePoint:
    X: object
    Y: object
    Z: object

    @property
    def is_zero(self) -> bool:
        return self.Z == 0 and self.X == 0

    def xy(self):
        """Affine coordinates; raises for points that are not affine units."""
        if self.Z != 1:
            raise ValueError("point is not affine over this ring")
        return self.X, self.Y

    def z_coordinate(self):
        """The uniformizer z = -X/Y (meaningful in the kernel of reduction)."""
        return -self.X * _inverse_of(self.Y)

    def __str__(self):
        if self.is_zero:
            return "O"
        if self.Z == 1:
            return f"({self.X}, {self.Y})"
        return f"({self.X} : {self.Y} : {self.Z})"


def _inverse_of(x):
    if isinstance(x, Fraction):
        return 1 / x
    return x ** -1


def _check_ring(E, *points):
    r = E.ring
    for P in points:
        for c in (P.X, P.Y, P.Z):
            if r == QQ:
                if not isinstance(c, Fraction):
                    raise RingMismatch(f"coordinate {c!r} is not rational")
            elif getattr(c, "prime", None) != r.prime or c.precision != r.precision:
                raise RingMismatch(f"coordinate {c!r} is not in {r!r}")


def normalize(E: WeierstrassCurve, X, Y, Z) -> CurvePoint:
    r = E.ring
    if r.is_unit(Z):
        u = r.inv(Z)
        return CurvePoint(X * u, Y * u, r.one)
    if r.is_unit(Y):
        u = r.inv(Y)
        return CurvePoint(X * u, r.one, Z * u)
    raise SingularReduction(f"non-primitive projective triple ({X} : {Y} : {Z})")


def _form(E, X, Y, Z):
    a1, a2, a3, a4, a6 = E.a_invariants
    return (Y * Y * Z + a1 * X * Y * Z + a3 * Y * Z * Z
            - X ** 3 - a2 * X * X * Z - a4 * X * Z * Z - a6 * Z ** 3)


def _gradient(E, P):
    a1, a2, a3, a4, a6 = E.a_invariants
    X, Y, Z = P.X, P.Y, P.Z
    fx = a1 * Y * Z - 3 * X * X - 2 * a2 * X * Z - a4 * Z * Z
    fy = 2 * Y * Z + a1 * X * Z + a3 * Z * Z
    fz = Y * Y + a1 * X * Y + 2 * a3 * Y * Z - a2 * X * X - 2 * a4 * X * Z - 3 * a6 * Z * Z
    return fx, fy, fz


def on_curve(E: WeierstrassCurve, P: CurvePoint) -> bool:
    return _form(E, P.X, P.Y, P.Z) == 0


def negate(E: WeierstrassCurve, P: CurvePoint) -> CurvePoint:
    return normalize(E, P.X, -P.Y - E.a1 * P.X - E.a3 * P.Z, P.Z)


def _same_reduction(E, P, Q) -> bool:
    u = E.ring.is_unit
    return not (u(P.X * Q.Y - P.Y * Q.X) or u(P.X * Q.Z - P.Z * Q.X)
                or u(P.Y * Q.Z - P.Z * Q.Y))


def _chord(E, P, Q):
    gp = _gradient(E, P)
    gq = _gradient(E, Q)
    c21 = gp[0] * Q.X + gp[1] * Q.Y + gp[2] * Q.Z
    c12 = gq[0] * P.X + gq[1] * P.Y + gq[2] * P.Z
    R = normalize(E, c12 * P.X - c21 * Q.X, c12 * P.Y - c21 * Q.Y, c12 * P.Z - c21 * Q.Z)
    return negate(E, R)


def _affine_near_diagonal(E, P, Q):
    r = E.ring
    a1, a2, a3, a4, a6 = E.a_invariants
    x1, y1 = P.X, P.Y
    x2, y2 = Q.X, Q.Y
    s = y1 + y2 + a1 * x1 + a3
    g = x1 * x1 + x1 * x2 + x2 * x2 + a2 * (x1 + x2) + a4 - a1 * y2
    if r.is_unit(s):
        lam = g * r.inv(s)
        nu = y1 - lam * x1
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return CurvePoint(x3, y3, r.one)
    if r.is_unit(g):
        k = s * r.inv(g)
        A = 1 + a1 * k - k * k * (a2 + x1 + x2)
        X3 = k * A
        Y3 = -(1 + a1 * k) * A + x1 * k * k - (y1 + a3) * k ** 3
        return normalize(E, X3, Y3, k ** 3)
    raise SingularReduction("both summands reduce to the singular point")


def _formal_add(E, P, Q):
    r = E.ring
    a1, a2, a3, a4, a6 = E.a_invariants
    z1, w1 = -P.X, -P.Z
    z2, w2 = -Q.X, -Q.Z
    A = z1 * z1 + z1 * z2 + z2 * z2 + a1 * w1 + a2 * (z1 + z2) * w1 + a4 * w1 * w1
    B = (1 - a1 * z2 - a2 * z2 * z2 - a3 * (w1 + w2) - a4 * z2 * (w1 + w2)
         - a6 * (w1 * w1 + w1 * w2 + w2 * w2))
    lam = A * r.inv(B)
    nu = w1 - lam * z1
    c3 = 1 + a2 * lam + a4 * lam * lam + a6 * lam ** 3
    c2 = a1 * lam + a2 * nu + a3 * lam * lam + 2 * a4 * lam * nu + 3 * a6 * lam * lam * nu
    z3 = -c2 * r.inv(c3) - z1 - z2
    w3 = lam * z3 + nu
    return negate(E, normalize(E, z3, -r.one, w3))


def add(E: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    _check_ring(E, P, Q)
    if P.is_zero:
        return Q
    if Q.is_zero:
        return P
    if not _same_reduction(E, P, Q):
        return _chord(E, P, Q)
    if E.ring.is_unit(P.Z):
        return _affine_near_diagonal(E, P, Q)
    return _formal_add(E, P, Q)


def sub(E, P, Q):
    return add(E, P, negate(E, Q))


def scalar_mul(E: WeierstrassCurve, n: int, P: CurvePoint) -> CurvePoint:
    if n < 0:
        return scalar_mul(E, -n, negate(E, P))
    R = E.zero
    for bit in bin(n)[2:]:
        R = add(E, R, R)
        if bit == "1":
            R = add(E, R, P)
    return R


def reduce_point(E: WeierstrassCurve, P: CurvePoint, p: int, mu: int = 1) -> CurvePoint:
    """Reduce a rational point into E(Z/p^mu); the result is primitive."""
    Ep = E.reduce(p, mu)
    if E.ring != QQ:
        return normalize(Ep, *(c.truncate(mu) for c in (P.X, P.Y, P.Z)))
    coords = [Fraction(c) for c in (P.X, P.Y, P.Z)]
    D = math.lcm(*(c.denominator for c in coords))
    ints = [int(c * D) for c in coords]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    R = Ep.ring
    return normalize(Ep, R(ints[0]), R(ints[1]), R(ints[2]))


def to_fp(E: WeierstrassCurve, P: CurvePoint | None, p: int):
    """Return (E mod p, P mod p), accepting inputs over Q or already over F_p."""
    if E.ring == QQ:
        Ep = E.reduce(p, 1)
        Pp = None if P is None else reduce_point(E, P, p, 1)
        return Ep, Pp
    if E.ring.prime != p:
        raise RingMismatch(f"curve over {E.ring!r} used with p = {p}")
    if E.ring.precision == 1:
        return E, P
    return E.reduce(p, 1), None if P is None else reduce_point(E, P, p, 1)


def has_good_reduction(E: WeierstrassCurve, p: int) -> bool:
    Ep, _ = to_fp(E, None, p)
    return Ep.ring.is_unit(Ep.discriminant)


def _is_singular_fp(Ep, Pp) -> bool:
    if Pp.is_zero or not Ep.ring.is_unit(Pp.Z):
        return False
    return not any(Ep.ring.is_unit(c) for c in _gradient(Ep, Pp))


def is_singular_point_mod_p(E: WeierstrassCurve, P: CurvePoint, p: int) -> bool:
    """True iff E has bad reduction at p and P reduces to its singular point."""
    Ep, Pp = to_fp(E, P, p)
    if Ep.ring.is_unit(Ep.discriminant):
        return False
    return _is_singular_fp(Ep, Pp)


def point_order_fp(E: WeierstrassCurve, P: CurvePoint, p: int,
                   allow_bad_reduction: bool = False) -> int:
    """Order of P mod p, by brute-force multiples.

    With ``allow_bad_reduction`` a curve with p | disc is accepted as long as P
    reduces to a nonsingular point (the nonsingular locus is still a group).
    """
    Ep, Pp = to_fp(E, P, p)
    if not Ep.ring.is_unit(Ep.discriminant):
        if not allow_bad_reduction or _is_singular_fp(Ep, Pp):
            raise SingularReduction(f"singular reduction at p = {p}")
    bound = p + 2 + 2 * math.isqrt(p) + 2
    R, r = Pp, 1
    while not R.is_zero:
        R = add(Ep, R, Pp)
        r += 1
        if r > bound:
            raise RuntimeError("point order exceeds the Hasse bound")
    return r


def count_points_fp(E: WeierstrassCurve, p: int) -> int:
    """#E(F_p) from the quadratic character of 4x^3 + b2 x^2 + 2 b4 x + b6.

    For p = 2 the four affine pairs are simply enumerated.
    """
    Ep, _ = to_fp(E, None, p)
    if not Ep.ring.is_unit(Ep.discriminant):
        raise SingularReduction(f"singular reduction at p = {p}")
    if p == 2:
        return 1 + sum(_form(Ep, *(Ep.ring(c) for c in (x, y, 1))) == 0 for x in (0, 1) for y in (0, 1))
    b2, b4, b6 = (int(c) for c in (Ep.b2, Ep.b4, Ep.b6))
    half = (p - 1) // 2
    total = 1
    for x in range(p):
        d = (((4 * x + b2) * x + 2 * b4) * x + b6) % p
        if d == 0:
            total += 1
        elif pow(d, half, p) == 1:
            total += 2
    return total


def trace_of_frobenius(E: WeierstrassCurve, p: int) -> int:
    return p + 1 - count_points_fp(E, p)


def is_supersingular(E: WeierstrassCurve, p: int) -> bool:
    return trace_of_frobenius(E, p) % p == 0


def parse_curve(text: str) -> WeierstrassCurve:
    """Five whitespace-separated rationals ``a1 a2 a3 a4 a6``."""
    parts = text.split()
    if len(parts) != 5:
        raise ValueError(f"expected five coefficients, got {text!r}")
    E = WeierstrassCurve(*(parse_rational(s) for s in parts))
    if E.discriminant == 0:
        raise ValueError(f"singular curve: {text!r}")
    return E


def parse_point(E: WeierstrassCurve, text: str) -> CurvePoint:
    """``"x y"`` as rationals, or the literal ``"O"``."""
    if text.strip() == "O":
        return E.zero
    parts = text.split()
    if len(parts) != 2:
        raise ValueError(f"expected 'x y' or 'O', got {text!r}")
    return E.point(parse_rational(parts[0]), parse_rational(parts[1]))


__all__ = [
    "WeierstrassCurve", "CurvePoint", "GF", "on_curve", "add", "sub", "negate",
    "scalar_mul", "reduce_point", "point_order_fp", "count_points_fp",
    "is_supersingular", "is_singular_point_mod_p", "has_good_reduction",
    "trace_of_frobenius", "parse_curve", "parse_point", "to_fp", "normalize",
]
