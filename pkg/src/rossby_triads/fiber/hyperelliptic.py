"""Bounded search for rational points on y^2 = 2187x^5 - 162x^3 - 40x^2 - x.

A rational 3-torsion point on some fiber would give a rational point on this
genus two curve other than (0, 0) and the point at infinity. This is a naive
height-bounded search, not a proof.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

__all__ = ["HyperellipticPoint", "HYPER_INFINITY", "QUINTIC", "quintic_value", "hyperelliptic_bounded_search"]

QUINTIC = (2187, 0, -162, -40, -1, 0)  # leading coefficient first

# moduli whose squares are sparse enough to make the sieve worthwhile
_SIEVE_MODULI = (64, 63, 65, 11, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class HyperellipticPoint(NamedTuple):
    x: Fraction | None
    y: Fraction | None


HYPER_INFINITY = HyperellipticPoint(None, None)


def quintic_value(x) -> Fraction:
    x = Fraction(x)
    return 2187 * x ** 5 - 162 * x ** 3 - 40 * x ** 2 - x


def _homogenised(p: int, q: int) -> int:
    # q^6 f(p/q); a square exactly when f(p/q) is a rational square
    return q * p * (2187 * p ** 4 - 162 * p * p * q * q - 40 * p * q ** 3 - q ** 4)


def _residue_tables():
    out = []
    for m in _SIEVE_MODULI:
        table = np.zeros(m, dtype=bool)
        table[(np.arange(m) ** 2) % m] = True
        out.append((m, table))
    return out


def _g_mod(p, q, m):
    p = p % m
    q = q % m
    p2 = p * p % m
    q2 = q * q % m
    inner = (2187 % m) * (p2 * p2 % m) % m
    inner = (inner - 162 * (p2 * q2 % m)) % m
    inner = (inner - 40 * (p * (q2 * q % m) % m)) % m
    inner = (inner - q2 * q2) % m
    return q * p % m * inner % m


def _real_locus_intervals():
    """Intervals of x where the quintic is >= 0 (bounded piece, unbounded piece)."""
    roots = np.roots([2187, 0, -162, -40, -1])
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-9)
    neg = [r for r in real if r < 0]
    pos = [r for r in real if r > 0]
    return max(neg), min(pos)


def hyperelliptic_bounded_search(height_bound: int) -> list[HyperellipticPoint]:
    """All points with x = p/q in lowest terms, |p|, q <= height_bound, plus infinity."""
    if height_bound < 1:
        raise ValueError("height bound must be >= 1")
    H = height_bound
    lo_root, hi_root = _real_locus_intervals()
    tables = _residue_tables()
    found = [HYPER_INFINITY]
    for q in range(1, H + 1):
        # f >= 0 exactly on [lo_root, 0] and [hi_root, inf); pad by one for rounding
        lo = max(-H, math.floor(lo_root * q) - 1)
        start = max(lo, -H)
        hi_start = max(math.ceil(hi_root * q) - 1, 1)
        ranges = [np.arange(start, 1, dtype=np.int64)]
        if hi_start <= H:
            ranges.append(np.arange(hi_start, H + 1, dtype=np.int64))
        p = np.concatenate(ranges)
        keep = np.gcd(p, q) == 1
        p = p[keep]
        for m, table in tables:
            if p.size == 0:
                break
            p = p[table[_g_mod(p, np.int64(q), m)]]
        for pv in p.tolist():
            g = _homogenised(pv, q)
            if g < 0:
                continue
            r = math.isqrt(g)
            if r * r == g:
                x = Fraction(pv, q)
                y = Fraction(r, q ** 3)
                found.extend(HyperellipticPoint(x, s * y) for s in ((1, -1) if y else (1,)))
    return sorted(found, key=lambda pt: (pt.x is not None, pt.x or 0, pt.y or 0))
