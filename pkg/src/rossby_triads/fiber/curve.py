"""The fiber C(a,b) over a fixed first wavevector and its Weierstrass model.

All (x, y) satisfying the resonance equation with (a, b) fixed form a genus one
curve. Its normalisation is ``W^2 = Z^3 + (a^2-2b^2) Z^2 + (a^2+b^2)^2 Z``; the
map ``to_weierstrass`` sends the single-wave point (0, 0) to the identity and
(a, b) to the 2-torsion point (0, 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..exceptions import ExceptionalPointError, OffCurveError, SingularFiberError, TriadError

__all__ = [
    "FiberCurve", "StdWeierstrass", "CurvePoint", "INFINITY",
    "make_fiber", "on_curve", "on_fiber", "ec_neg", "ec_add", "ec_mul",
    "to_weierstrass", "from_weierstrass", "trivial_points",
]


class CurvePoint(NamedTuple):
    """A point of the Weierstrass model; ``INFINITY`` has ``Z = W = None``."""

    Z: Fraction | None
    W: Fraction | None

    @property
    def is_infinity(self) -> bool:
        return self.Z is None

    def __repr__(self):
        if self.is_infinity:
            return "CurvePoint(inf)"
        return f"CurvePoint({self.Z}, {self.W})"


INFINITY = CurvePoint(None, None)


def _pt(Z, W) -> CurvePoint:
    return CurvePoint(Fraction(Z), Fraction(W))


@dataclass(frozen=True)
class StdWeierstrass:
    """``Y^2 = X^3 + A X + B`` with ``X = Z + c2/3``."""

    A: Fraction
    B: Fraction
    shift: Fraction

    def to_std(self, pt: CurvePoint):
        if pt.is_infinity:
            return None
        return pt.Z + self.shift, pt.W

    def from_std(self, X, Y) -> CurvePoint:
        return _pt(Fraction(X) - self.shift, Y)


@dataclass(frozen=True)
class FiberCurve:
    a: int
    b: int

    def __post_init__(self):
        if self.a == 0:
            raise SingularFiberError("the fiber over a = 0 is singular")

    @property
    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    @property
    def c2(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    @property
    def c4(self) -> int:
        return self.norm ** 2

    @property
    def disc(self) -> int:
        a2, b2 = self.a * self.a, self.b * self.b
        return -48 * a2 * self.norm ** 4 * (a2 + 4 * b2)

    def standard(self) -> StdWeierstrass:
        a2, b2 = self.a * self.a, self.b * self.b
        A = Fraction(2 * a2 * a2 + 10 * a2 * b2 - b2 * b2, 3)
        B = Fraction(-(a2 - 2 * b2) * (7 * a2 * a2 + 26 * a2 * b2 + b2 * b2), 27)
        return StdWeierstrass(A, B, Fraction(self.c2, 3))

    def rhs(self, Z):
        return Z * (Z * Z + self.c2 * Z + self.c4)


def make_fiber(a: int, b: int) -> FiberCurve:
    return FiberCurve(a, b)


def on_curve(curve: FiberCurve, pt: CurvePoint) -> bool:
    return pt.is_infinity or pt.W * pt.W == curve.rhs(pt.Z)


def on_fiber(curve: FiberCurve, x, y) -> bool:
    """Affine resonance equation with (a, b) fixed, over the rationals."""
    a, b = curve.a, curve.b
    n1 = curve.norm
    n3 = x * x + y * y
    cross = 2 * a * x + 2 * b * y
    return x * n1 * (n1 - cross) == a * n3 * (n3 - cross)


def _check(curve, *pts):
    for p in pts:
        if not on_curve(curve, p):
            raise OffCurveError(f"{p!r} is not on W^2 = Z^3 + {curve.c2} Z^2 + {curve.c4} Z")


def ec_neg(curve: FiberCurve, p: CurvePoint) -> CurvePoint:
    _check(curve, p)
    return p if p.is_infinity else CurvePoint(p.Z, -p.W)


def _add(curve, p, q):
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.Z == q.Z:
        if p.W != q.W or p.W == 0:
            return INFINITY
        lam = (3 * p.Z * p.Z + 2 * curve.c2 * p.Z + curve.c4) / (2 * p.W)
    else:
        lam = (q.W - p.W) / (q.Z - p.Z)
    Z = lam * lam - curve.c2 - p.Z - q.Z
    return CurvePoint(Z, lam * (p.Z - Z) - p.W)


def ec_add(curve: FiberCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition on the model ``W^2 = Z^3 + c2 Z^2 + c4 Z``."""
    _check(curve, p, q)
    return _add(curve, p, q)


def ec_mul(curve: FiberCurve, n: int, p: CurvePoint) -> CurvePoint:
    _check(curve, p)
    if n < 0:
        n, p = -n, CurvePoint(p.Z, -p.W) if not p.is_infinity else p
    acc = INFINITY
    while n:
        if n & 1:
            acc = _add(curve, acc, p)
        p = _add(curve, p, p)
        n >>= 1
    return acc


def to_weierstrass(curve: FiberCurve, x, y) -> CurvePoint:
    x, y = Fraction(x), Fraction(y)
    a, b, n = curve.a, curve.b, curve.norm
    if not on_fiber(curve, x, y):
        raise OffCurveError(f"({x}, {y}) is not on C({a},{b})")
    if x == 0 and y == 0:
        return INFINITY
    if x == a and y == b:
        return CurvePoint(Fraction(0), Fraction(0))
    if x == a and y == -b:
        # the third point where d vanishes on the fiber; its image is P + T
        return CurvePoint(Fraction(4 * b * b), Fraction(-2 * b * (a * a + 3 * b * b)))
    d = n * x - a * (x * x + y * y)
    e = b * x - a * y
    if d == 0 or e == 0:
        raise ExceptionalPointError(f"the Weierstrass map is undefined at ({x}, {y})")
    Z = -(n * n) * (a - x) / d
    W = a * n * n * (a - x) * (n - a * x - b * y + x * x + y * y) / (e * d)
    return CurvePoint(Z, W)


def from_weierstrass(curve: FiberCurve, pt: CurvePoint) -> tuple[Fraction, Fraction]:
    """Inverse of :func:`to_weierstrass`.

    A level set of Z is a circle through (a, ±b); on it the fiber equation
    drops to a line, and the W coordinate gives a second line. Their
    intersection is the closed form below.
    """
    _check(curve, pt)
    a, b, n = curve.a, curve.b, curve.norm
    if pt.is_infinity:
        return Fraction(0), Fraction(0)
    Z, W = pt
    if Z == 0:
        return Fraction(a), Fraction(b)
    den = W * (Z * Z + n * n) + b * Z * (Z * Z - n * n)
    if den == 0:
        raise ExceptionalPointError(f"the inverse map is undefined at {pt!r}")
    x = a * n * (W * n - b * Z * (2 * Z + n)) / den
    y = n * (b * n * W + Z ** 3 + (a * a - b * b) * Z * Z + a * a * n * Z) / den
    return x, y


def trivial_points(curve: FiberCurve):
    """``(O, T, P, P+T)``: images of (0,0), (a,b), (0,2b) and (a,-b)."""
    a, b = curve.a, curve.b
    if b == 0:
        raise TriadError("P = (0, 2b) collapses onto O when b = 0")
    n = curve.norm
    P = CurvePoint(Fraction(n * n, 4 * b * b), Fraction(n * n * (a * a + 3 * b * b), 8 * b ** 3))
    T = CurvePoint(Fraction(0), Fraction(0))
    return INFINITY, T, P, ec_add(curve, P, T)
