"""Brute-force ground truth for the resonance surface.

Two independent routes to the integer points in a box:

* ``oracle_naive`` evaluates the resonance polynomial on every quadruple of
  the box (vectorised, O(N^4));
* the fiber route fixes (a, b), bounds x by the compactness of the real
  locus, and solves the quartic in y exactly for each x.

Both feed the wavevector sets, the growth counts and the conjecture scanners.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from .core import Quad, TriadClass, WaveVec, canonicalize, classify_triad, resonance_defect, symmetry_orbit
from .exceptions import SingularFiberError, TriadError
from .introots import PRIMES, integer_roots, locate_integer_roots
from .parametrization import SearchRegion, box_norm, enumerate_region, parameter_bound, region_hits

log = logging.getLogger(__name__)

__all__ = [
    "NaiveHit", "oracle_naive", "fiber_quartic", "disc_radius", "fiber_integer_points",
    "FiberBudgetExceeded", "zero_column_points", "oracle_fibers",
    "LatticeSets", "lambda_sets", "GrowthReport", "growth_functions",
    "Violation", "conjecture1_scan", "b_zero_check", "b_zero_violations", "sweep_coverage",
]

_NAIVE_INT64_MAX_N = 1200  # 12 N^5 < 2^63
_CHUNK = 200_000


class FiberBudgetExceeded(TriadError):
    pass


# --------------------------------------------------------------------------
# naive search


class NaiveHit(NamedTuple):
    cls: TriadClass
    in_box: bool  # membership of the primitive representative in B_N
    primitive: bool


def oracle_naive(N: int) -> dict[Quad, NaiveHit]:
    """Every canonical quadruple in [-N, N]^4 on the surface, with its class and B_N flag.

    Canonical representatives are primitive by construction.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if N > _NAIVE_INT64_MAX_N:
        raise ValueError(f"naive search is limited to N <= {_NAIVE_INT64_MAX_N}")
    r = np.arange(-N, N + 1, dtype=np.int64)
    B, X, Y = np.meshgrid(r, r, r, indexing="ij")
    n3 = X * X + Y * Y
    out: dict[Quad, NaiveHit] = {}
    for a in range(-N, N + 1):
        n1 = a * a + B * B
        cross = 2 * a * X + 2 * B * Y
        defect = X * n1 * (n1 - cross) - a * n3 * (n3 - cross)
        idx = np.nonzero(defect == 0)
        for b, x, y in zip(B[idx].tolist(), X[idx].tolist(), Y[idx].tolist()):
            if a == 0 and b == 0 and x == 0 and y == 0:
                continue
            q = canonicalize((a, b, x, y))[0]
            if q not in out:
                out[q] = NaiveHit(classify_triad(q), box_norm(q) <= N, math.gcd(*q) == 1)
    return dict(sorted(out.items()))


# --------------------------------------------------------------------------
# fiber route


def fiber_quartic(a: int, b: int, x: int) -> tuple[int, int, int, int, int]:
    """Coefficients in y (leading first) of minus the resonance polynomial at fixed (a, b, x)."""
    n1 = a * a + b * b
    return (
        a,
        -2 * a * b,
        2 * a * x * (x - a),
        2 * b * x * (n1 - a * x),
        a * x ** 3 * (x - 2 * a) - x * n1 * (n1 - 2 * a * x),
    )


def disc_radius(a: int, b: int) -> int:
    """An integer R with x^2 + y^2 <= R^2 for every real point (x, y) of C(a, b).

    Put rho = isqrt(a^2+b^2) + 1 and c = 2ax + 2by, so |c| <= 2 rho R. Taking
    absolute values in x n1 (n1 - c) = a n3 (n3 - c) gives
    |a| R^2 (R - 2 rho) <= rho^3 (rho + 2R); once R >= 4 rho this forces
    R^2 <= 6 rho^3 / |a|.
    """
    if a == 0:
        raise SingularFiberError("the real locus is unbounded when a = 0")
    rho = math.isqrt(a * a + b * b) + 1
    return max(4 * rho, math.isqrt(6 * rho ** 3 // abs(a)) + 1)


def _defect_mod(a, b, x, y, p):
    # residues are below 2^31, so every product is reduced before it is added
    a, b, x, y = a % p, b % p, x % p, y % p
    n1 = (a * a % p + b * b % p) % p
    n3 = (x * x % p + y * y % p) % p
    cross = 2 * ((a * x % p + b * y % p) % p) % p
    lhs = x * n1 % p * ((n1 - cross) % p) % p
    rhs = a * n3 % p * ((n3 - cross) % p) % p
    return (lhs - rhs) % p


def _solve_columns(A: np.ndarray, B: np.ndarray, X: np.ndarray, ylo: int, yhi: int) -> list[tuple[int, int, int, int]]:
    """Integer points (a, b, x, y) with y in [ylo, yhi] over the given (a, b, x) columns."""
    pts = []
    for s in range(0, len(A), _CHUNK):
        a, b, x = A[s:s + _CHUNK], B[s:s + _CHUNK], X[s:s + _CHUNK]
        af, bf, xf = a.astype(float), b.astype(float), x.astype(float)
        n1 = af * af + bf * bf
        coeffs = np.stack([
            af,
            -2 * af * bf,
            2 * af * xf * (xf - af),
            2 * bf * xf * (n1 - af * xf),
            af * xf ** 3 * (xf - 2 * af) - xf * n1 * (n1 - 2 * af * xf),
        ], axis=1)
        ri, yi = locate_integer_roots(coeffs, ylo, yhi)
        ca, cb, cx = a[ri], b[ri], x[ri]
        for p in PRIMES:
            keep = _defect_mod(ca, cb, cx, yi, np.int64(p)) == 0
            ca, cb, cx, yi = ca[keep], cb[keep], cx[keep], yi[keep]
        for q in zip(ca.tolist(), cb.tolist(), cx.tolist(), yi.tolist()):
            if resonance_defect(q) == 0:
                pts.append(q)
    return pts


def _window(radius, window):
    lo, hi = -radius, radius
    if window is not None:
        lo, hi = max(lo, window[0]), min(hi, window[1])
    return lo, hi


def fiber_integer_points(
    a: int,
    b: int,
    x_window: tuple[int, int] | None = None,
    y_window: tuple[int, int] | None = None,
    method: str = "batch",
    max_columns: int | None = None,
) -> frozenset[tuple[int, int]]:
    """All integer points of C(a, b), optionally clipped to windows in x and y.

    ``method="exact"`` runs the purely integer root isolation per column;
    ``"batch"`` locates roots numerically for all columns at once and verifies
    every candidate exactly.
    """
    if a == 0:
        raise SingularFiberError("the fiber over a = 0 is degenerate; use zero_column_points")
    R = disc_radius(a, b)
    xlo, xhi = _window(R, x_window)
    ylo, yhi = _window(R, y_window)
    if xlo > xhi or ylo > yhi:
        return frozenset()
    if max_columns is not None and xhi - xlo + 1 > max_columns:
        raise FiberBudgetExceeded(f"C({a},{b}) needs {xhi - xlo + 1} columns")
    if method == "exact":
        pts = set()
        for x in range(xlo, xhi + 1):
            pts.update((x, y) for y in integer_roots(fiber_quartic(a, b, x), ylo, yhi))
    elif method == "batch":
        X = np.arange(xlo, xhi + 1, dtype=np.int64)
        A = np.full_like(X, a)
        B = np.full_like(X, b)
        pts = {(x, y) for _, _, x, y in _solve_columns(A, B, X, ylo, yhi)}
    else:
        raise ValueError(f"unknown method {method!r}")
    for x, y in pts:
        if x * x + y * y > R * R:
            raise AssertionError(f"({x},{y}) lies outside the disc bound of C({a},{b})")
    return frozenset(pts)


def zero_column_points(b: int, N: int) -> set[tuple[int, int]]:
    """Points (x, y) in [-N, N]^2 with (0, b, x, y) on the surface.

    With a = 0 the equation reduces to x b^2 (b - 2y) b = 0, i.e. x = 0, or
    2y = b, or b = 0 (every point).
    """
    r = range(-N, N + 1)
    if b == 0:
        return {(x, y) for x in r for y in r}
    pts = {(0, y) for y in r}
    if b % 2 == 0 and abs(b // 2) <= N:
        pts |= {(x, b // 2) for x in r}
    return pts


def oracle_fibers(N: int) -> frozenset[Quad]:
    """Canonical surface points in [-N, N]^4 assembled fiber by fiber."""
    cols_a, cols_b, cols_x = [], [], []
    out: set[Quad] = set()
    for a in range(-N, N + 1):
        for b in range(-N, N + 1):
            if a == 0:
                for x, y in zero_column_points(b, N):
                    if b or x or y:
                        out.add(canonicalize((0, b, x, y))[0])
                continue
            xlo, xhi = _window(disc_radius(a, b), (-N, N))
            xs = np.arange(xlo, xhi + 1, dtype=np.int64)
            cols_x.append(xs)
            cols_a.append(np.full_like(xs, a))
            cols_b.append(np.full_like(xs, b))
    A, B, X = (np.concatenate(c) for c in (cols_a, cols_b, cols_x))
    for q in _solve_columns(A, B, X, -N, N):
        out.add(canonicalize(q)[0])
    return frozenset(out)


# --------------------------------------------------------------------------
# wavevector sets


@dataclass
class LatticeSets:
    """Lambda and Lambda' restricted to a box, with provenance."""

    lam: frozenset[WaveVec]
    lam_prime: frozenset[WaveVec]
    box: int
    backend: str
    sweep_bound: int | None = None
    skipped: list[WaveVec] = field(default_factory=list)
    witnesses: dict[WaveVec, tuple[int, int]] = field(default_factory=dict)

    def describe(self) -> str:
        s = f"backend={self.backend} box={self.box}"
        if self.sweep_bound is not None:
            s += f" sweep_bound={self.sweep_bound}"
        if self.skipped:
            s += f" skipped_fibers={len(self.skipped)}"
        return s


def _mirror(v):
    a, b = v
    return {WaveVec(a, b), WaveVec(a, -b), WaveVec(-a, -b), WaveVec(-a, b)}


def _fiber_membership(args):
    a, b, max_columns = args
    try:
        pts = fiber_integer_points(a, b, max_columns=max_columns)
    except FiberBudgetExceeded:
        return a, b, None, None, None
    wit = wit_p = None
    for x, y in sorted(pts):
        if x * (a - x) == 0:
            continue
        if wit is None:
            wit = (x, y)
        if math.gcd(a, b, x, y) == 1:
            wit_p = (x, y)
            break
    return a, b, True, wit, wit_p


def _lambda_exact(a_max, b_max, max_columns, workers):
    jobs = [(a, b, max_columns) for a in range(1, a_max + 1) for b in range(0, b_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_fiber_membership, jobs, chunksize=16))
    else:
        results = [_fiber_membership(j) for j in jobs]
    lam, lam_p, skipped, wits = set(), set(), [], {}
    for a, b, done, wit, wit_p in results:
        if done is None:
            skipped.extend(sorted(_mirror((a, b))))
            continue
        if wit is not None:
            lam |= _mirror((a, b))
            wits[WaveVec(a, b)] = wit
        if wit_p is not None:
            lam_p |= _mirror((a, b))
    return lam, lam_p, sorted(set(skipped)), wits


def _lambda_sweep(a_max, b_max, sweep_bound, workers):
    reps = region_hits(SearchRegion(sweep_bound), wave_box=max(a_max, b_max), workers=workers)
    lam_p = set()
    for rep in reps:
        for q in symmetry_orbit(rep):
            if abs(q.a) <= a_max and abs(q.b) <= b_max:
                lam_p.add(WaveVec(q.a, q.b))
    lam = set()
    for v in lam_p:
        m = 1
        while abs(m * v.k) <= a_max and abs(m * v.l) <= b_max:
            lam.add(WaveVec(m * v.k, m * v.l))
            m += 1
    return lam, lam_p


def lambda_sets(
    N: int,
    backend: str = "exact",
    sweep_bound: int | None = None,
    max_columns: int | None = 2_000_000,
    workers: int = 1,
    b_max: int | None = None,
) -> LatticeSets:
    """Lambda and Lambda' inside [-N, N] x [-b_max, b_max] (b_max defaults to N).

    ``exact`` decides every fiber completely (fibers needing more than
    ``max_columns`` x-values are reported in ``skipped``); ``sweep`` only
    records wavevectors witnessed by the region sweep up to ``sweep_bound``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    b_max = N if b_max is None else b_max
    if backend == "exact":
        lam, lam_p, skipped, wits = _lambda_exact(N, b_max, max_columns, workers)
        return LatticeSets(frozenset(lam), frozenset(lam_p), N, "exact", None, skipped, wits)
    if backend == "sweep":
        if sweep_bound is None:
            raise ValueError("the sweep backend needs a sweep_bound")
        lam, lam_p = _lambda_sweep(N, b_max, sweep_bound, workers)
        return LatticeSets(frozenset(lam), frozenset(lam_p), N, "sweep", sweep_bound)
    raise ValueError(f"unknown backend {backend!r}")


# --------------------------------------------------------------------------
# growth functions and scanners


@dataclass
class GrowthReport:
    N: int
    F1: int
    F2: int
    F3: int
    a_cutoff: int
    backend: str

    def line(self) -> str:
        return (f"N={self.N} F1={self.F1} F2={self.F2} (|a| <= {self.a_cutoff}, truncated strip)"
                f" F3={self.F3} backend={self.backend}")


def _count_b_n_exact(N: int) -> int:
    """Signed primitive nontrivial quadruples in B_N, via the fiber route."""
    n = 0
    for a in range(-N, N + 1):
        if a == 0:
            continue
        for b in range(-N, N + 1):
            for x, y in fiber_integer_points(a, b, (max(-N, a - N), min(N, a + N)), (max(-N, b - N), min(N, b + N))):
                if x * (a - x) != 0 and math.gcd(a, b, x, y) == 1:
                    n += 1
    return n


def growth_functions(
    N: int,
    a_cutoff: int,
    backend: str = "exact",
    sweep_bound: int | None = None,
    workers: int = 1,
) -> GrowthReport:
    """F1 = |Lambda' in [-N,N]^2|, F2 = |Lambda' in [-a_cutoff,a_cutoff] x [-N,N]|,
    F3 = number of signed primitive nontrivial quadruples in B_N.

    The strip of F2 is unbounded in a; it is truncated at ``a_cutoff`` and the
    truncation is part of the report.
    """
    if a_cutoff < N:
        raise ValueError("a_cutoff must be >= N")
    sets = lambda_sets(a_cutoff, backend, sweep_bound, workers=workers, b_max=N)
    F2 = len(sets.lam_prime)
    F1 = sum(1 for v in sets.lam_prime if abs(v.k) <= N)
    if backend == "exact":
        F3 = _count_b_n_exact(N)
    else:
        F3 = sum(len(symmetry_orbit(r)) for r in enumerate_region(SearchRegion(sweep_bound), box=N, workers=workers))
    return GrowthReport(N, F1, F2, F3, a_cutoff, backend)


class Violation(NamedTuple):
    a: int
    b: int
    witness: tuple[int, int]
    primitive: bool


def conjecture1_scan(N: int, sweep_bound: int = 200, backend: str = "sweep", workers: int = 1) -> list[Violation]:
    """Positive members (a, b) of Lambda in the box with a^2 >= 3 b^8.

    Every flagged point is re-verified on its own fiber, which also supplies
    the witness (x, y).
    """
    sets = lambda_sets(N, backend, sweep_bound, workers=workers)
    out = []
    for v in sorted(sets.lam):
        a, b = v
        if a > 0 and b > 0 and a * a >= 3 * b ** 8:
            wits = sorted((x, y) for x, y in fiber_integer_points(a, b) if x * (a - x) != 0)
            if not wits:
                raise AssertionError(f"sweep claimed {v} but its fiber has no nontrivial point")
            prim = [w for w in wits if math.gcd(a, b, *w) == 1]
            w = (prim or wits)[0]
            out.append(Violation(a, b, w, bool(prim)))
    return out


def b_zero_violations(N: int) -> list[Quad]:
    out = []
    for a in range(1, N + 1):
        for x, y in fiber_integer_points(a, 0, (-N, N), (-N, N)):
            if x * (a - x) != 0 and abs(a - x) <= N:
                out.append(Quad(a, 0, x, y))
    return out


def b_zero_check(N: int) -> bool:
    """True iff no nontrivial triad with b = 0 has all entries in [-N, N]."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return not b_zero_violations(N)


def sweep_coverage(quads: Iterable[Quad]) -> dict[Quad, int | None]:
    """Minimal sweep bound producing each nontrivial orbit (None if never)."""
    out = {}
    for q in quads:
        hit = parameter_bound(q)
        out[hit.quad if hit else q] = max(hit[1:]) if hit else None
    return dict(sorted(out.items()))
