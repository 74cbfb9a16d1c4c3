"""Rational parametrization of the triad surface and the bounded region sweep.

The forward map sends ``[s:t:u]`` to a resonant quadruple via four quintic
forms; the inverse is ``[a^2+b^2 : bx-ay : ax+by]``. The sweep walks the cube
``0 < s, t, w <= bound`` in the shifted coordinate ``w = s - 2u``; since ``u``
may be half-integral it evaluates the forms at ``[2s : 2t : s - w]`` instead.
"""
from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .core import Quad, canonicalize, primitive, symmetry_orbit
from .exceptions import ExceptionalParameterError, TriadError

__all__ = [
    "ParamPoint", "SearchRegion", "BoxFilter", "RegionHit",
    "param_forward", "param_inverse", "in_box", "box_norm",
    "orbit_representative", "region_hits", "enumerate_region",
    "expand_orbits", "parameter_bound", "default_workers",
]

# int64 is exact for the quintic forms below this bound (|values| < 2^62).
_INT64_SAFE_BOUND = 1500


class ParamPoint(NamedTuple):
    s: int
    t: int
    u: int

    def canonical(self) -> "ParamPoint":
        g = math.gcd(*self)
        if g == 0:
            raise TriadError("[0:0:0] is not a point of the projective plane")
        for c in self:
            if c:
                g = g if c > 0 else -g
                break
        return ParamPoint(*(c // g for c in self))


@dataclass(frozen=True)
class SearchRegion:
    bound: int
    enforce_inequality: bool = True

    def __post_init__(self):
        if self.bound < 1:
            raise TriadError("search bound must be >= 1")


@dataclass(frozen=True)
class BoxFilter:
    """Membership in B_N: the six numbers a, b, x, y, a-x, b-y all lie in [-N, N]."""

    N: int

    def __post_init__(self):
        if self.N < 1:
            raise TriadError("box size must be >= 1")

    def __contains__(self, q) -> bool:
        return box_norm(q) <= self.N


class RegionHit(NamedTuple):
    """An orbit representative together with the first (s, t, w) that produced it."""

    quad: Quad
    s: int
    t: int
    w: int


def param_forward(p) -> Quad:
    s, t, u = p
    q1 = t * t + u * u
    q2 = t * t - 2 * s * u + u * u
    sm2u = s - 2 * u
    out = Quad(
        s ** 3 * t * sm2u,
        s * (-s * s * u * sm2u + q1 * q2),
        t * q1 * q2,
        q1 * (-s * s * sm2u + u * q2),
    )
    if not any(out):
        raise ExceptionalParameterError(f"[{s}:{t}:{u}] maps to the zero vector")
    return out


def param_inverse(q) -> ParamPoint:
    a, b, x, y = q
    p = ParamPoint(a * a + b * b, b * x - a * y, a * x + b * y)
    if not any(p):
        raise ExceptionalParameterError(f"{tuple(q)} has no parameter image")
    return p.canonical()


def box_norm(q) -> int:
    """Smallest N with ``q`` in B_N. Constant on symmetry orbits."""
    a, b, x, y = q
    return max(abs(a), abs(b), abs(x), abs(y), abs(a - x), abs(b - y))


def in_box(q, f: BoxFilter | int) -> bool:
    n = f.N if isinstance(f, BoxFilter) else f
    return box_norm(q) <= n


def orbit_representative(q) -> Quad:
    """Lexicographically least sign-normalised member of the symmetry orbit."""
    return min(canonicalize(g)[0] for g in symmetry_orbit(q))


def expand_orbits(reps) -> list[Quad]:
    """All signed primitive quadruples in the orbits of ``reps``, sorted."""
    out = set()
    for r in reps:
        out |= symmetry_orbit(r)
    return sorted(out)


# --------------------------------------------------------------------------
# region sweep


def _wave_norm(a, b, x, y):
    """Smallest M such that some wavevector of the triad lies in [-M, M]^2."""
    m1 = np.maximum(abs(a), abs(b))
    m2 = np.maximum(abs(x - a), abs(y - b))
    m3 = np.maximum(abs(x), abs(y))
    return np.minimum(np.minimum(m1, m2), m3)


def _slice_int64(s, bound, enforce, box, wave_box):
    t = np.arange(1, bound + 1, dtype=np.int64)
    T, W = np.meshgrid(t, t, indexing="ij")
    T = T.ravel()
    W = W.ravel()
    if enforce:
        keep = 4 * T * T > (3 * s - W) * (s + W)
        T, W = T[keep], W[keep]
    ss = np.int64(2 * s)
    tt = 2 * T
    uu = s - W
    sm2u = 2 * W
    q1 = tt * tt + uu * uu
    q2 = tt * tt - 2 * ss * uu + uu * uu
    a = ss ** 3 * tt * sm2u
    b = ss * (-ss * ss * uu * sm2u + q1 * q2)
    x = tt * q1 * q2
    y = q1 * (-ss * ss * sm2u + uu * q2)
    g = np.gcd(np.gcd(a, b), np.gcd(x, y))
    nz = g != 0
    a, b, x, y, T, W, g = (v[nz] for v in (a, b, x, y, T, W, g))
    a //= g
    b //= g
    x //= g
    y //= g
    keep = (a != 0) & (x != 0) & (a != x)
    if box is not None:
        keep &= np.maximum.reduce([abs(a), abs(b), abs(x), abs(y), abs(a - x), abs(b - y)]) <= box
    if wave_box is not None:
        keep &= _wave_norm(a, b, x, y) <= wave_box
    cols = (a[keep], b[keep], x[keep], y[keep], T[keep], W[keep])
    return list(zip(*(c.tolist() for c in cols)))


def _slice_python(s, bound, enforce, box, wave_box):
    rows = []
    for t in range(1, bound + 1):
        for w in range(1, bound + 1):
            if enforce and 4 * t * t <= (3 * s - w) * (s + w):
                continue
            try:
                q = primitive(param_forward((2 * s, 2 * t, s - w)))
            except TriadError:
                continue
            a, b, x, y = q
            if a == 0 or x == 0 or a == x:
                continue
            if box is not None and box_norm(q) > box:
                continue
            if wave_box is not None and min(
                max(abs(a), abs(b)), max(abs(x - a), abs(y - b)), max(abs(x), abs(y))
            ) > wave_box:
                continue
            rows.append((a, b, x, y, t, w))
    return rows


def _sweep_slice(args):
    s, bound, enforce, box, wave_box = args
    impl = _slice_int64 if bound <= _INT64_SAFE_BOUND else _slice_python
    found = {}
    for a, b, x, y, t, w in impl(s, bound, enforce, box, wave_box):
        rep = orbit_representative((a, b, x, y))
        if rep not in found:  # t, w ascend within a slice
            found[rep] = (s, t, w)
    return found


def default_workers() -> int:
    env = os.environ.get("ROSSBY_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def region_hits(
    region: SearchRegion,
    box: BoxFilter | int | None = None,
    wave_box: int | None = None,
    workers: int | None = None,
    timings: dict | None = None,
) -> dict[Quad, tuple[int, int, int]]:
    """Sweep the parameter cube and collect nontrivial orbit representatives.

    ``box`` keeps only triads in B_N; ``wave_box`` keeps triads having at least
    one wavevector inside ``[-M, M]^2`` (what the wavevector-set sweep needs).
    Each representative maps to the lexicographically first ``(s, t, w)`` that
    generated it, so the result does not depend on ``workers``. If ``timings``
    is given, wall-clock seconds for the ``sweep`` and ``merge`` phases are
    stored in it.
    """
    t0 = time.perf_counter()
    if isinstance(box, BoxFilter):
        box = box.N
    workers = default_workers() if workers is None else workers
    jobs = [(s, region.bound, region.enforce_inequality, box, wave_box)
            for s in range(1, region.bound + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_slice, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        parts = [_sweep_slice(j) for j in jobs]
    t1 = time.perf_counter()
    merged: dict[Quad, tuple[int, int, int]] = {}
    for part in parts:  # slices arrive in ascending s
        for rep, stw in part.items():
            if rep not in merged:
                merged[rep] = stw
    out = dict(sorted(merged.items()))
    if timings is not None:
        timings["sweep"] = t1 - t0
        timings["merge"] = time.perf_counter() - t1
    return out


def enumerate_region(
    region: SearchRegion,
    box: BoxFilter | int | None = None,
    wave_box: int | None = None,
    workers: int | None = None,
) -> Iterator[Quad]:
    """Sorted stream of orbit representatives of nontrivial triads found in ``region``."""
    yield from region_hits(region, box=box, wave_box=wave_box, workers=workers)


def parameter_bound(q, enforce_inequality: bool = True) -> RegionHit | None:
    """Smallest sweep bound at which the orbit of ``q`` shows up, or None.

    Works backwards through the inverse map for every orbit member, so it gives
    the exact minimal bound without running the sweep.
    """
    best = None
    for g in symmetry_orbit(q):
        try:
            s0, t0, u0 = param_inverse(g)
        except ExceptionalParameterError:
            continue
        w0 = s0 - 2 * u0
        d = math.gcd(s0, t0, w0)
        s, t, w = s0 // d, t0 // d, w0 // d
        if s < 0:
            s, t, w = -s, -t, -w
        if min(s, t, w) <= 0:
            continue
        if enforce_inequality and 4 * t * t <= (3 * s - w) * (s + w):
            continue
        try:
            image = param_forward((2 * s, 2 * t, s - w))
        except ExceptionalParameterError:
            continue
        if canonicalize(image)[0] != canonicalize(g)[0]:
            continue
        hit = RegionHit(orbit_representative(g), s, t, w)
        if best is None or max(hit[1:]) < max(best[1:]) or (
            max(hit[1:]) == max(best[1:]) and hit[1:] < best[1:]
        ):
            best = hit
    return best
