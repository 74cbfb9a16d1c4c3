"""Elliptic-fiber machinery: Weierstrass model, group law, torsion checks."""
from .curve import (
    INFINITY, CurvePoint, FiberCurve, StdWeierstrass, ec_add, ec_mul, ec_neg,
    from_weierstrass, make_fiber, on_curve, on_fiber, to_weierstrass, trivial_points,
)
from .hyperelliptic import HYPER_INFINITY, HyperellipticPoint, hyperelliptic_bounded_search, quintic_value
from .table import TableRow, common_denominator, fiber_point_table, zonal_zero_denominators
from .torsion import (
    MAZUR_MAX_ORDER, TorsionReport, division_polynomial, is_rational_square,
    psi4_linear_factors, rational_roots, torsion_scan,
)

__all__ = [
    "INFINITY", "CurvePoint", "FiberCurve", "StdWeierstrass", "ec_add", "ec_mul", "ec_neg",
    "from_weierstrass", "make_fiber", "on_curve", "on_fiber", "to_weierstrass", "trivial_points",
    "HYPER_INFINITY", "HyperellipticPoint", "hyperelliptic_bounded_search", "quintic_value",
    "TableRow", "common_denominator", "fiber_point_table", "zonal_zero_denominators",
    "MAZUR_MAX_ORDER", "TorsionReport", "division_polynomial", "is_rational_square",
    "psi4_linear_factors", "rational_roots", "torsion_scan",
]
