"""Division polynomials, elliptic divisibility sequences and their p-adic limits."""
from .curve import CurvePoint, WeierstrassCurve, scalar_mul
from .divpoly import NetContext, eval_division_value
from .eds import Eds, classify_prime, eds_padic_limit, from_curve_point, generate
from .padic import LimitCertificate, padic_limit, teichmuller_point
from .periodicity import PeriodCertificate, find_period
from .ring import GF, QQ, PadicResidue, ResidueRing, teichmuller_unit

__version__ = "0.1.0"

__all__ = [
    "CurvePoint", "WeierstrassCurve", "scalar_mul", "NetContext", "eval_division_value",
    "Eds", "classify_prime", "eds_padic_limit", "from_curve_point", "generate",
    "LimitCertificate", "padic_limit", "teichmuller_point", "PeriodCertificate", "find_period",
    "GF", "QQ", "PadicResidue", "ResidueRing", "teichmuller_unit",
]
