"""Zeta functions of odd-degree hyperelliptic curves over F_{p^n}, p odd,
via the action of a Frobenius lift on p-adic cohomology."""

from .finite_field import CurveData, FieldCtx, count_points_oracle, validate_curve
from .padic_ring import RingCtx
from .zeta import ZetaResult, compute_zeta, make_precision_profile

__all__ = [
    "CurveData",
    "FieldCtx",
    "RingCtx",
    "ZetaResult",
    "compute_zeta",
    "count_points_oracle",
    "make_precision_profile",
    "validate_curve",
]
