"""Exception hierarchy.

``GateRefused`` subclasses mark inputs that are well formed but fall outside
the hypotheses of the computation (bad reduction, supersingular primes, ...).
The CLI maps them to exit code 3; every other ``EdsLabError`` is exit code 2.
"""


class EdsLabError(ValueError):
    pass


class GateRefused(EdsLabError):
    pass


# ring
class NotPrime(EdsLabError):
    pass


class NonUnitDenominator(EdsLabError):
    pass


class NonUnit(EdsLabError):
    pass


class NotCoprime(EdsLabError):
    pass


class PrecisionMismatch(EdsLabError):
    pass


# curve
class RingMismatch(EdsLabError):
    pass


class NotOnCurve(EdsLabError):
    pass


class BadCoefficients(EdsLabError):
    pass


class SingularReduction(GateRefused):
    pass


class UnsupportedPrime(EdsLabError):
    pass


# divpoly
class PointAtInfinity(EdsLabError):
    pass


class NonUnitDivisor(EdsLabError):
    """F_2 is not invertible: the point has order 2 modulo p."""


# periodicity
class TrivialPoint(GateRefused):
    pass


class BoundTooSmall(EdsLabError):
    pass


class ZeroDenominator(EdsLabError):
    pass


class PeriodNotFound(EdsLabError):
    pass


# padic
class OrderDivisibleByP(GateRefused):
    pass


class SupersingularReduction(GateRefused):
    pass


class OrderTwo(GateRefused):
    pass


class PEqualsTwo(GateRefused):
    pass


class DegenerateValuation(EdsLabError):
    """ord_p F_r(P) >= 2: the mod p^2 congruence carries no information."""


class ConvergenceError(EdsLabError):
    pass


# eds
class NonIntegralStep(EdsLabError):
    pass


class ImproperResult(EdsLabError):
    pass


class NonIntegralPoint(EdsLabError):
    pass


class InadmissiblePrime(GateRefused):
    def __init__(self, message, classification=None):
        super().__init__(message)
        self.classification = classification
