import math

import pytest

from rossby_triads import Quad, TriadClass, WaveVec, orbit_representative, resonance_defect, symmetry_orbit
from rossby_triads.exceptions import SingularFiberError
from rossby_triads.oracle import (
    FiberBudgetExceeded, b_zero_check, b_zero_violations, conjecture1_scan, disc_radius, fiber_integer_points,
    fiber_quartic, growth_functions, lambda_sets, oracle_fibers, oracle_naive, sweep_coverage,
    zero_column_points,
)
from rossby_triads.parametrization import SearchRegion, enumerate_region
from rossby_triads.core import SYMMETRY_GENERATORS


def test_quartic_is_the_surface():
    for a, b, x in [(1, 1, 3), (13, 13, 16), (-4, 7, 2)]:
        c = fiber_quartic(a, b, x)
        for y in range(-5, 6):
            assert sum(ci * y ** (4 - i) for i, ci in enumerate(c)) == -resonance_defect((a, b, x, y))


def test_disc_radius_contains_real_fiber():
    import numpy as np
    for a, b in [(16, 2), (1, 5), (3, -1), (-2, 9)]:
        R = disc_radius(a, b)
        n1 = a * a + b * b
        for x in np.linspace(-3 * R, 3 * R, 3001):
            c = [a, -2 * a * b, 2 * a * x * (x - a), 2 * b * x * (n1 - a * x),
                 a * x ** 3 * (x - 2 * a) - x * n1 * (n1 - 2 * a * x)]
            for y in np.roots(c):
                if abs(y.imag) < 1e-9:
                    assert math.hypot(x, y.real) <= R


def test_fiber_examples():
    assert fiber_integer_points(1, 1) == {(0, 0), (1, 1), (0, 2), (1, -1)}
    assert (16, 2) in fiber_integer_points(13, 13)
    assert (16, -2) in fiber_integer_points(1, 8)
    with pytest.raises(SingularFiberError):
        fiber_integer_points(0, 4)


@pytest.mark.parametrize("ab", [(1, 1), (13, 13), (1, 8), (16, 2), (5, -3), (-7, 4), (2, 11)])
def test_batch_and_exact_paths_agree(ab):
    assert fiber_integer_points(*ab) == fiber_integer_points(*ab, method="exact")


def test_fiber_against_brute_force():
    for a in range(-6, 7):
        if a == 0:
            continue
        for b in range(-6, 7):
            R = disc_radius(a, b)
            brute = {(x, y) for x in range(-R, R + 1) for y in range(-R, R + 1)
                     if resonance_defect((a, b, x, y)) == 0}
            assert fiber_integer_points(a, b) == brute


def test_budget():
    with pytest.raises(FiberBudgetExceeded):
        fiber_integer_points(1, 50, max_columns=10)
    sets = lambda_sets(6, max_columns=40)
    assert sets.skipped and all(WaveVec(-v.k, -v.l) in sets.skipped for v in sets.skipped)


def test_zero_column():
    assert zero_column_points(3, 2) == {(0, y) for y in range(-2, 3)}
    assert (5, 2) in zero_column_points(4, 6)
    for b in range(-4, 5):
        for x, y in zero_column_points(b, 4):
            assert resonance_defect((0, b, x, y)) == 0


def test_naive_small():
    hits = oracle_naive(16)
    assert Quad(1, 8, 16, -2) in hits
    assert hits[Quad(1, 8, 16, -2)].cls == TriadClass.NONTRIVIAL
    assert all(h.primitive for h in hits.values())
    for q, h in hits.items():
        if q.b == 0:
            assert h.cls != TriadClass.NONTRIVIAL
    keys = set(hits)
    from rossby_triads import canonicalize
    for q in keys:
        for g in SYMMETRY_GENERATORS:
            img = g(q)
            if max(map(abs, img)) <= 16:
                assert canonicalize(img)[0] in keys


def test_naive_equals_fibers_small():
    for N in (1, 5, 17):
        assert set(oracle_naive(N)) == oracle_fibers(N)


def test_lambda_exact():
    sets = lambda_sets(20)
    assert WaveVec(13, 13) in sets.lam_prime
    assert WaveVec(1, 1) not in sets.lam
    assert sets.lam_prime <= sets.lam
    for k, l in sets.lam:
        assert {(k, -l), (-k, -l)} <= sets.lam
    for k, l in sets.lam_prime:
        assert {(k, -l), (-k, -l)} <= sets.lam_prime
    assert all(v.k != 0 for v in sets.lam)
    for v, (x, y) in sets.witnesses.items():
        assert resonance_defect((v.k, v.l, x, y)) == 0 and x * (v.k - x) != 0


def test_sweep_subset_of_exact():
    exact = lambda_sets(25)
    sweep = lambda_sets(25, "sweep", sweep_bound=40)
    assert sweep.lam <= exact.lam and sweep.lam_prime <= exact.lam_prime
    assert lambda_sets(10).lam == lambda_sets(10, "sweep", sweep_bound=200).lam


def test_growth():
    prev = None
    for N in (5, 10, 15):
        rep = growth_functions(N, 20)
        assert rep.F1 % 4 == 0 and rep.F2 % 4 == 0 and rep.F1 <= rep.F2
        if prev:
            assert rep.F1 >= prev.F1 and rep.F3 >= prev.F3
        assert "truncated" in rep.line()
        prev = rep
    with pytest.raises(ValueError):
        growth_functions(10, 5)


def test_growth_f3_against_naive():
    N = 17
    hits = oracle_naive(N)
    signed = set()
    for q, h in hits.items():
        if h.cls == TriadClass.NONTRIVIAL and h.in_box:
            signed |= {q, Quad(*(-c for c in q))}
    assert growth_functions(N, N).F3 == len(signed)


def test_conjecture_small():
    assert conjecture1_scan(100) == []


def test_b_zero():
    assert b_zero_check(1) and b_zero_check(40)
    assert b_zero_violations(40) == []
    for a in range(1, 15):
        assert all(x * (a - x) == 0 for x, _ in fiber_integer_points(a, 0))


def test_sweep_coverage():
    cov = sweep_coverage([Quad(1, 8, 16, -2)])
    (rep, bound), = cov.items()
    assert rep == orbit_representative((1, 8, 16, -2))
    assert rep in set(enumerate_region(SearchRegion(bound)))


def test_batch_agrees_with_exact_on_all_sign_patterns():
    for a, b in [(16, 2), (13, 13), (1, 8), (800, 4)]:
        for sa in (1, -1):
            for sb in (1, -1):
                win = (-400, 400)
                pa, pb = sa * a, sb * b
                assert fiber_integer_points(pa, pb, win, win) == fiber_integer_points(pa, pb, win, win, method="exact")
