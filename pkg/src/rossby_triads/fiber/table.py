"""Multiples of the zonal point P on a fiber, and the denominator sequence on C(1,1)."""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import NamedTuple

from .curve import INFINITY, CurvePoint, FiberCurve, ec_add, from_weierstrass, make_fiber, trivial_points

log = logging.getLogger(__name__)

__all__ = ["TableRow", "fiber_point_table", "zonal_zero_denominators", "common_denominator"]


class TableRow(NamedTuple):
    label: str
    point: CurvePoint
    xy: tuple[Fraction, Fraction]


def _label(m: int, plus_t: bool) -> str:
    core = "P" if abs(m) == 1 else f"{abs(m)}P"
    core = core if m > 0 else "-" + core
    return core + "+T" if plus_t else core


def _multiples(curve: FiberCurve, m_max: int):
    """Yield ``(m, mP, mP+T, -mP, -mP+T)`` for m = 1..m_max."""
    _, T, P, _ = trivial_points(curve)
    mp = INFINITY
    for m in range(1, m_max + 1):
        mp = ec_add(curve, mp, P)
        neg = CurvePoint(mp.Z, -mp.W)
        yield m, mp, ec_add(curve, mp, T), neg, ec_add(curve, neg, T)


def fiber_point_table(curve: FiberCurve, m_max: int) -> list[TableRow]:
    """Rows ``0, T`` then ``mP, mP+T, -mP, -mP+T`` for each m, with exact (x, y)."""
    rows = [
        TableRow("0", INFINITY, from_weierstrass(curve, INFINITY)),
        TableRow("T", CurvePoint(Fraction(0), Fraction(0)), (Fraction(curve.a), Fraction(curve.b))),
    ]
    for m, p, pt, n, nt in _multiples(curve, m_max):
        for label, pt_ in ((_label(m, False), p), (_label(m, True), pt), (_label(-m, False), n), (_label(-m, True), nt)):
            rows.append(TableRow(label, pt_, from_weierstrass(curve, pt_)))
    return rows


def common_denominator(xy) -> int:
    x, y = xy
    return x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)


def zonal_zero_denominators(count: int) -> list[int]:
    """The first ``count`` integers n > 1 with (n, n) a primitive resonant wavevector.

    Walks m = 1, 2, ... over the points mP, mP+T, -mP, -mP+T of C(1,1) and stops
    once the smallest denominator produced by the current m already exceeds the
    ``count``-th smallest one collected.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    curve = make_fiber(1, 1)
    found: set[int] = set()
    m = 0
    for m, *pts in _multiples(curve, 10 ** 6):
        dens = []
        for pt in pts:
            x, y = from_weierstrass(curve, pt)
            if x.denominator != y.denominator:
                log.warning("x and y denominators differ at m=%d: %s, %s", m, x, y)
            d = common_denominator((x, y))
            dens.append(d)
            if d > 1:
                found.add(d)
        if len(found) >= count and min(dens) > sorted(found)[count - 1]:
            break
    return sorted(found)[:count]
