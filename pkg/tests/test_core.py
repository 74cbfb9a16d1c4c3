from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rossby_triads import (
    DispersionParams, Quad, Triad, TriadClass, WaveVec, canonicalize, classify_triad, group_velocity,
    omega, on_x_circ, primitive, resonance_defect, resonates_via_omega, symmetry_orbit, SYMMETRY_GENERATORS,
)
from rossby_triads.exceptions import NotOnSurfaceError, TriadError, ZeroVectorError

ints = st.integers(-60, 60)
nonzero = st.tuples(ints, ints).filter(lambda v: v != (0, 0))

PURE_CUBE = Quad(1, 8, 16, -2)


def direct_omega(k, l):
    return Fraction(-k, k * k + l * l)


def test_pure_cube_family():
    for s in range(1, 5):
        for t in range(1, 5):
            q = (s ** 4, s * t ** 3, t ** 4, -(s ** 3) * t)
            assert resonance_defect(q) == 0


def test_classes():
    assert classify_triad(PURE_CUBE) == TriadClass.NONTRIVIAL
    assert classify_triad((1, 1, 0, 2)) == TriadClass.ZONAL
    assert classify_triad((1, 1, 1, 1)) == TriadClass.SINGLE_WAVE
    assert classify_triad((0, 0, 3, 4)) == TriadClass.SINGLE_WAVE
    with pytest.raises(NotOnSurfaceError):
        classify_triad((1, 2, 3, 4))


def test_on_x_circ():
    assert on_x_circ(PURE_CUBE)
    assert not on_x_circ((1, 1, 1, 1))
    assert not on_x_circ((1, 2, 3, 4))


@given(nonzero, nonzero)
def test_defect_matches_frequency_sum(v1, v2):
    v3 = (v1[0] + v2[0], v1[1] + v2[1])
    if v3 == (0, 0):
        return
    q = (*v1, *v3)
    direct = direct_omega(*v1) + direct_omega(*v2) == direct_omega(*v3)
    assert (resonance_defect(q) == 0) == direct
    assert resonates_via_omega((WaveVec(*v1), WaveVec(*v2), WaveVec(*v3))) == direct


def test_triad_roundtrip():
    t = Triad.from_quad(PURE_CUBE)
    assert t.v1 + t.v2 == t.v3
    assert t.cls == TriadClass.NONTRIVIAL
    assert t.to_quad() == PURE_CUBE
    assert Triad.from_vectors((1, 8), (16, -2)) == t
    assert resonates_via_omega(t)


def test_closure_is_checked():
    with pytest.raises(TriadError):
        resonates_via_omega(((1, 0), (0, 1), (2, 2)))


def test_zero_vector():
    with pytest.raises(ZeroVectorError):
        omega((0, 0))
    with pytest.raises(ZeroVectorError):
        group_velocity((0, 0))


def test_omega_and_group_velocity():
    assert omega((1, 1)) == Fraction(-1, 2)
    # zonal group velocity vanishes on the diagonals
    assert group_velocity((13, 13))[0] == 0
    assert group_velocity((2, 1)) == (Fraction(3, 25), Fraction(4, 25))
    assert DispersionParams(2).frequency((1, 0)) == -2
    with pytest.raises(TriadError):
        DispersionParams(0)


@given(st.tuples(ints, ints, ints, ints).filter(any), st.integers(-5, 5).filter(bool))
def test_canonicalize(q, m):
    rep, scale = canonicalize(q)
    assert tuple(scale * c for c in rep) == q
    assert canonicalize(tuple(m * c for c in q))[0] == rep
    assert next(c for c in rep if c) > 0
    assert primitive(q) == Quad(*(c // abs(scale) for c in q))


def test_orbit_of_generic_point():
    orb = symmetry_orbit(PURE_CUBE)
    assert len(orb) == 24
    for q in orb:
        assert resonance_defect(q) == 0
        for g in SYMMETRY_GENERATORS:
            assert g(q) in orb


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_generators_preserve_surface(s, t, k):
    q = (k * s ** 4, k * s * t ** 3, k * t ** 4, -k * s ** 3 * t)
    for g in SYMMETRY_GENERATORS:
        assert resonance_defect(g(q)) == 0


def test_generators_preserve_surface_off_sample():
    # a generator maps the surface to itself, not merely its points
    import sympy as sp
    a, b, x, y = sp.symbols("a b x y")
    f = sp.expand(resonance_defect((a, b, x, y)))
    for g in SYMMETRY_GENERATORS:
        h = sp.expand(resonance_defect(g((a, b, x, y))))
        assert sp.simplify(h / f).is_constant()
