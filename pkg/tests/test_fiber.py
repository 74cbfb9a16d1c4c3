import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rossby_triads.exceptions import OffCurveError, SingularFiberError, TriadError
from rossby_triads.fiber import (
    INFINITY, CurvePoint, division_polynomial, ec_add, ec_mul, ec_neg, fiber_point_table,
    from_weierstrass, hyperelliptic_bounded_search, make_fiber, on_curve, on_fiber, psi4_linear_factors,
    quintic_value, rational_roots, to_weierstrass, torsion_scan, trivial_points, zonal_zero_denominators,
)
from rossby_triads.fiber.curve import FiberCurve

T0 = CurvePoint(Fraction(0), Fraction(0))
nz = st.integers(-40, 40).filter(bool)


def test_invariants():
    c = make_fiber(1, 1)
    assert (c.c2, c.c4, c.norm) == (-1, 4, 2)
    assert c.disc == -48 * 1 * 2 ** 4 * (1 + 4)
    std = c.standard()
    assert (std.A, std.B) == (Fraction(11, 3), Fraction(34, 27))
    with pytest.raises(SingularFiberError):
        make_fiber(0, 3)


def test_trivial_points():
    c = make_fiber(1, 1)
    O, T, P, PT = trivial_points(c)
    assert O == INFINITY and T == T0
    assert P == CurvePoint(1, 2) and PT == CurvePoint(4, -8)
    with pytest.raises(TriadError):
        trivial_points(make_fiber(2, 0))


@settings(max_examples=100)
@given(nz, nz)
def test_group_law_closure(a, b):
    c = make_fiber(a, b)
    _, T, P, PT = trivial_points(c)
    assert ec_add(c, T, T) == INFINITY
    assert ec_add(c, P, T) == PT
    pts = [P, PT, ec_mul(c, 2, P), ec_mul(c, -3, P)]
    for p in pts:
        assert on_curve(c, p)
        assert ec_add(c, p, ec_neg(c, p)) == INFINITY
        for q in pts:
            s = ec_add(c, p, q)
            assert s == INFINITY or on_curve(c, s)
            assert s == ec_add(c, q, p)
    assert ec_add(c, ec_add(c, pts[0], pts[2]), pts[3]) == ec_add(c, pts[0], ec_add(c, pts[2], pts[3]))
    assert ec_mul(c, 3, P) == ec_add(c, P, ec_add(c, P, P))


def test_off_curve_input():
    c = make_fiber(1, 1)
    with pytest.raises(OffCurveError):
        ec_add(c, CurvePoint(Fraction(1), Fraction(1)), T0)


def test_fiber_maps_roundtrip_on_table():
    c = make_fiber(1, 1)
    for row in fiber_point_table(c, 4):
        x, y = row.xy
        assert on_fiber(c, x, y)
        assert to_weierstrass(c, x, y) == row.point
    assert to_weierstrass(c, 0, 0) == INFINITY
    assert to_weierstrass(c, 1, 1) == T0


@settings(max_examples=30)
@given(nz, nz)
def test_fiber_maps_roundtrip_random_fibers(a, b):
    c = make_fiber(a, b)
    _, _, P, _ = trivial_points(c)
    T = trivial_points(c)[1]
    for m in (1, 2, -3):
        for pt in (ec_mul(c, m, P), ec_add(c, ec_mul(c, m, P), T)):
            x, y = from_weierstrass(c, pt)
            assert on_fiber(c, x, y)
            assert to_weierstrass(c, x, y) == pt


def test_division_polynomials():
    c = make_fiber(1, 1)
    std = c.standard()
    psi3 = division_polynomial(3, c)
    x = psi3.gens[0]
    assert (9 * psi3.as_expr() - (27 * x ** 4 + 198 * x ** 2 + 136 * x - 121)).expand() == 0
    # 3-torsion X-coordinates are exactly the roots of psi_3; P has infinite order so none is P
    assert rational_roots(psi3) == []
    X0 = std.to_std(ec_mul(c, 2, trivial_points(c)[2]))[0]
    assert division_polynomial(2, c).as_expr() == 2
    for n in (4, 5, 6, 7):
        expected = (n * n - 4) // 2 if n % 2 == 0 else (n * n - 1) // 2
        assert division_polynomial(n, c).degree() == expected
    # 2T = O so T's X is a root of the 2-division polynomial y, i.e. of x^3 + Ax + B
    XT = std.to_std(T0)[0]
    assert XT ** 3 + std.A * XT + std.B == 0
    assert X0 is not None


def test_psi4_factors_divide():
    c = make_fiber(3, 2)
    p4 = division_polynomial(4, c)
    for X0 in psi4_linear_factors(c):
        assert p4.as_expr().subs("x", X0) == 0


def test_torsion_scan_one_fiber():
    rep = torsion_scan(make_fiber(1, 1))
    assert rep.ok and rep.torsion_is_z2
    assert rep.two_torsion_disc == -15
    assert [(z, w2) for z, w2, _ in rep.four_torsion_candidates] == [(2, 12), (-2, -20)]
    assert any("4-torsion" in l for l in rep.lines())


def test_torsion_scan_b_zero():
    rep = torsion_scan(make_fiber(1, 0))
    assert rep.p_infinite_order is None and rep.torsion_is_z2
    assert any("degenerate" in l for l in rep.lines())


def test_zonal_denominators_small():
    assert zonal_zero_denominators(3) == [13, 229, 3277]
    with pytest.raises(ValueError):
        zonal_zero_denominators(0)


def test_hyperelliptic_small():
    pts = hyperelliptic_bounded_search(300)
    assert [(p.x, p.y) for p in pts] == [(None, None), (0, 0)]
    assert quintic_value(Fraction(1, 3)) == Fraction(9) - 6 - Fraction(40, 9) - Fraction(1, 3)
    assert quintic_value(0) == 0


def test_hyperelliptic_against_brute_force():
    # every x = p/q with small height where f(x) is a rational square
    found = set()
    for q in range(1, 40):
        for p in range(-40, 41):
            if math.gcd(p, q) != 1:
                continue
            v = quintic_value(Fraction(p, q))
            if v >= 0:
                n, d = v.numerator, v.denominator
                if math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d:
                    found.add(Fraction(p, q))
    got = {p.x for p in hyperelliptic_bounded_search(40) if p.x is not None}
    assert got == found
