"""Exact rationals, residues mod p^mu, valuations and the Teichmuller character.

Rationals are ``fractions.Fraction``.  A ``PadicResidue`` carries its prime and
precision explicitly; arithmetic between residues of different (p, mu) raises
``PrecisionMismatch`` instead of coercing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .errors import (
    NonUnit,
    NonUnitDenominator,
    NotCoprime,
    NotPrime,
    PrecisionMismatch,
    UnsupportedPrime,
)

INFINITY = math.inf


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    return p >= 2 and bool(sympy.isprime(p))


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p!r} is not prime")


def parse_rational(text: str) -> Fraction:
    """Parse ``"n"`` or ``"n/d"`` (base 10)."""
    text = text.strip().replace("−", "-")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _ord_int(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def padic_valuation(x, p: int):
    """ord_p of a rational; ``math.inf`` for zero."""
    _require_prime(p)
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return _ord_int(abs(x.numerator), p) - _ord_int(x.denominator, p)


def p_free_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


@dataclass(frozen=True, slots=True)
class PadicResidue:
    value: int
    prime: int
    precision: int

    def __post_init__(self):
        m = self.prime ** self.precision
        if not 0 <= self.value < m:
            object.__setattr__(self, "value", self.value % m)

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    def _coerce(self, other) -> int:
        if isinstance(other, PadicResidue):
            if other.prime != self.prime or other.precision != self.precision:
                raise PrecisionMismatch(
                    f"{self.prime}^{self.precision} vs {other.prime}^{other.precision}"
                )
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return residue_of(other, self.prime, self.precision).value
        return NotImplemented

    def _new(self, v: int) -> PadicResidue:
        return PadicResidue(v % self.modulus, self.prime, self.precision)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return unit_inverse(self) ** (-e)
        return PadicResidue(pow(self.value, e, self.modulus), self.prime, self.precision)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * unit_inverse(self._new(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o) * unit_inverse(self)

    def __eq__(self, other):
        if isinstance(other, PadicResidue):
            return (self.value, self.prime, self.precision) == (
                other.value, other.prime, other.precision)
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.prime, self.precision))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def is_unit(self) -> bool:
        return self.value % self.prime != 0

    def valuation(self):
        """Truncated valuation; ``inf`` when the residue is 0 mod p^mu."""
        if self.value == 0:
            return INFINITY
        return _ord_int(self.value, self.prime)

    def truncate(self, precision: int) -> PadicResidue:
        if precision > self.precision:
            raise PrecisionMismatch("cannot widen precision")
        return PadicResidue(self.value, self.prime, precision)

    def __str__(self):
        return f"{self.value} mod {self.prime}^{self.precision}"


def residue_of(x, p: int, mu: int) -> PadicResidue:
    """Image of a p-integral rational in Z/p^mu."""
    x = Fraction(x)
    m = p ** mu
    if x.denominator % p == 0:
        raise NonUnitDenominator(f"{x} is not {p}-integral")
    return PadicResidue(x.numerator * pow(x.denominator, -1, m) % m, p, mu)


def unit_inverse(a: PadicResidue) -> PadicResidue:
    if not a.is_unit():
        raise NonUnit(f"{a} is not a unit")
    return PadicResidue(pow(a.value, -1, a.modulus), a.prime, a.precision)


def teichmuller_unit(a: PadicResidue) -> PadicResidue:
    """The (p-1)-st root of unity congruent to ``a`` mod p: the fixed point of a -> a^p."""
    if a.prime == 2:
        raise UnsupportedPrime("Teichmuller lift needs an odd prime")
    if not a.is_unit():
        raise NonUnit(f"{a} is not a unit")
    m, p = a.modulus, a.prime
    v = a.value
    while True:
        w = pow(v, p, m)
        if w == v:
            return PadicResidue(v, p, a.precision)
        v = w


def mult_order(a: int, n: int) -> int:
    """Least e >= 1 with a^e = 1 mod n."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    return int(sympy.n_order(a % n, n))


class RationalField:
    """Q as a coefficient ring.  Units are the nonzero elements."""

    prime = None
    precision = None

    def __call__(self, x) -> Fraction:
        if isinstance(x, PadicResidue):
            raise PrecisionMismatch("cannot lift a residue to Q")
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def is_unit(self, x) -> bool:
        return x != 0

    def inv(self, x) -> Fraction:
        if x == 0:
            raise NonUnit("0 is not invertible")
        return 1 / Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class ResidueRing:
    """Z/p^mu.  With mu = 1 this is the prime field F_p."""

    def __init__(self, p: int, mu: int = 1):
        if mu < 1:
            raise ValueError("precision must be >= 1")
        _require_prime(p)
        self.prime = p
        self.precision = mu
        self.modulus = p ** mu
        self.zero = PadicResidue(0, p, mu)
        self.one = PadicResidue(1, p, mu)

    def __call__(self, x) -> PadicResidue:
        if isinstance(x, PadicResidue):
            if x.prime != self.prime or x.precision != self.precision:
                raise PrecisionMismatch(f"{x} is not in {self!r}")
            return x
        if isinstance(x, int):
            return PadicResidue(x % self.modulus, self.prime, self.precision)
        return residue_of(x, self.prime, self.precision)

    def is_unit(self, x) -> bool:
        return x.value % self.prime != 0

    def inv(self, x) -> PadicResidue:
        return unit_inverse(x)

    def __eq__(self, other):
        return (isinstance(other, ResidueRing) and other.prime == self.prime
                and other.precision == self.precision)

    def __hash__(self):
        return hash((self.prime, self.precision))

    def __repr__(self):
        if self.precision == 1:
            return f"GF({self.prime})"
        return f"Z/{self.prime}^{self.precision}"


def GF(p: int) -> ResidueRing:
    return ResidueRing(p, 1)
