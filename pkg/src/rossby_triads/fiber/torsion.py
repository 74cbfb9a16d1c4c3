"""Per-fiber torsion checks via division polynomials.

Mazur's classification leaves orders up to 12; a rational 2-torsion point
already exists, so it suffices to exclude extra 2-torsion and points of order
3, 4 and 5, then confirm that nP != O for n <= 12.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from sympy import QQ, Poly, Symbol

from .curve import INFINITY, CurvePoint, FiberCurve, ec_mul, trivial_points

__all__ = ["division_polynomial", "psi4_linear_factors", "rational_roots", "is_rational_square",
           "TorsionReport", "torsion_scan", "MAZUR_MAX_ORDER"]

MAZUR_MAX_ORDER = 12
X = Symbol("x")


def _poly(expr) -> Poly:
    return Poly(expr, X, domain=QQ)


@lru_cache(maxsize=4096)
def _division_table(A: Fraction, B: Fraction, n: int) -> dict[int, Poly]:
    # g[k] is psi_k for odd k and psi_k / y for even k
    x = _poly(X)
    A, B = QQ(A.numerator, A.denominator), QQ(B.numerator, B.denominator)
    F = x ** 3 + A * x + B
    g = {
        0: _poly(0),
        1: _poly(1),
        2: _poly(2),
        3: 3 * x ** 4 + 6 * A * x ** 2 + 12 * B * x - A ** 2,
        4: 4 * (x ** 6 + 5 * A * x ** 4 + 20 * B * x ** 3 - 5 * A ** 2 * x ** 2 - 4 * A * B * x - 8 * B ** 2 - A ** 3),
    }
    for k in range(5, n + 1):
        m = k // 2
        if k % 2:
            if m % 2 == 0:
                g[k] = F ** 2 * g[m + 2] * g[m] ** 3 - g[m - 1] * g[m + 1] ** 3
            else:
                g[k] = g[m + 2] * g[m] ** 3 - F ** 2 * g[m - 1] * g[m + 1] ** 3
        else:
            g[k] = g[m] * (g[m + 2] * g[m - 1] ** 2 - g[m - 2] * g[m + 1] ** 2) * QQ(1, 2)
    return g


def division_polynomial(n: int, curve: FiberCurve) -> Poly:
    """n-th division polynomial of the standard model, as a polynomial in its X.

    For even n the factor y is dropped, so ``division_polynomial(2, c) == 2``.
    """
    if n < 2:
        raise ValueError("division polynomials are only provided for n >= 2")
    std = curve.standard()
    return _division_table(std.A, std.B, n)[n]


def psi4_linear_factors(curve: FiberCurve) -> tuple[Fraction, Fraction]:
    """The two rational roots of psi_4/psi_2 that could carry a point R with 2R = T."""
    a2, b2 = curve.a ** 2, curve.b ** 2
    return Fraction(4 * a2 + b2, 3), Fraction(-(2 * a2 + 5 * b2), 3)


def rational_roots(p: Poly) -> list[Fraction]:
    roots = p.ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def is_rational_square(q: Fraction) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


@dataclass
class TorsionReport:
    a: int
    b: int
    two_torsion_disc: int
    extra_two_torsion: bool
    psi3_roots: list[Fraction]
    three_torsion: list[CurvePoint]
    four_torsion_candidates: list[tuple[Fraction, Fraction, bool]]
    psi5_roots: list[Fraction]
    five_torsion: list[CurvePoint]
    p_order_bound_checked: int | None
    p_infinite_order: bool | None
    notes: list[str] = field(default_factory=list)

    @property
    def torsion(self) -> tuple[CurvePoint, ...]:
        pts = [INFINITY, CurvePoint(Fraction(0), Fraction(0))]
        pts += self.three_torsion + self.five_torsion
        pts += [CurvePoint(z, w) for z, w, ok in self.four_torsion_candidates if ok]
        return tuple(pts)

    @property
    def torsion_is_z2(self) -> bool:
        return not (self.extra_two_torsion or self.three_torsion or self.five_torsion
                    or any(ok for *_, ok in self.four_torsion_candidates))

    @property
    def ok(self) -> bool:
        return self.torsion_is_z2 and self.p_infinite_order is not False

    def lines(self) -> list[str]:
        out = [
            f"fiber C({self.a},{self.b})",
            f"  2-torsion: quadratic discriminant {self.two_torsion_disc}"
            f" -> {'extra rational 2-torsion' if self.extra_two_torsion else 'no extra 2-torsion'}",
            f"  3-torsion: rational roots of psi_3 {[str(r) for r in self.psi3_roots]}"
            f" -> {len(self.three_torsion)} rational points",
        ]
        for z, w2, ok in self.four_torsion_candidates:
            out.append(f"  4-torsion candidate Z={z}: W^2={w2} {'square' if ok else 'not a square'}")
        out.append(f"  5-torsion: rational roots of psi_5 {[str(r) for r in self.psi5_roots]}"
                   f" -> {len(self.five_torsion)} rational points")
        if self.p_infinite_order is None:
            out.append("  P: degenerate (b = 0), order check skipped")
        else:
            out.append(f"  P: nP != O for 1 <= n <= {self.p_order_bound_checked}"
                       f" -> {'infinite order' if self.p_infinite_order else 'TORSION'}")
        out.append(f"  torsion subgroup: {'{O, T}' if self.torsion_is_z2 else 'larger than Z/2'}")
        out.extend("  note: " + n for n in self.notes)
        return out


def _points_over(std, roots) -> list[CurvePoint]:
    pts = []
    for X0 in roots:
        Y2 = X0 ** 3 + std.A * X0 + std.B
        if is_rational_square(Y2):
            Y = Fraction(math.isqrt(Y2.numerator), math.isqrt(Y2.denominator))
            pts.extend(std.from_std(X0, s * Y) for s in ((1, -1) if Y else (1,)))
    return pts


def torsion_scan(curve: FiberCurve) -> TorsionReport:
    """Check, for this particular (a, b), that the rational torsion is {O, T}."""
    a, b = curve.a, curve.b
    std = curve.standard()
    disc = curve.c2 ** 2 - 4 * curve.c4  # = -3a^2(a^2+4b^2)
    extra2 = disc >= 0 and is_rational_square(Fraction(disc))

    psi3 = rational_roots(division_polynomial(3, curve))
    psi5 = rational_roots(division_polynomial(5, curve))
    four = []
    for X0 in psi4_linear_factors(curve):
        z = X0 - std.shift
        w2 = curve.rhs(z)
        four.append((z, w2, is_rational_square(w2)))

    notes = []
    if b == 0:
        notes.append("P = (0, 2b) coincides with O; the infinite-order certificate does not apply")
        bound, infinite = None, None
    else:
        _, _, P, _ = trivial_points(curve)
        bound = MAZUR_MAX_ORDER
        infinite = all(ec_mul(curve, n, P) != INFINITY for n in range(1, bound + 1))
    return TorsionReport(a, b, disc, extra2, psi3, _points_over(std, psi3), four,
                         psi5, _points_over(std, psi5), bound, infinite, notes)
