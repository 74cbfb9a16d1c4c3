"""Exact resonance arithmetic for Rossby-wave triads on the doubly periodic domain.

A triad is stored as a quadruple ``(a, b, x, y)`` where ``(a, b)`` is the first
wavevector, ``(x, y)`` the sum wavevector and ``(x - a, y - b)`` the second one.
Frequencies are reported as exact rational multiples of ``beta``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .exceptions import NotOnSurfaceError, TriadError, ZeroVectorError

Rat = Fraction

__all__ = [
    "Rat", "WaveVec", "Quad", "TriadClass", "Triad", "DispersionParams",
    "resonance_defect", "on_x_circ", "classify_triad", "omega",
    "resonates_via_omega", "group_velocity", "canonicalize", "primitive",
    "SYMMETRY_GENERATORS", "symmetry_orbit",
]


class WaveVec(NamedTuple):
    k: int
    l: int

    def __add__(self, other):  # componentwise, not tuple concatenation
        return WaveVec(self.k + other[0], self.l + other[1])

    def __sub__(self, other):
        return WaveVec(self.k - other[0], self.l - other[1])

    def __neg__(self):
        return WaveVec(-self.k, -self.l)

    @property
    def is_zero(self) -> bool:
        return self.k == 0 and self.l == 0


class Quad(NamedTuple):
    """Homogeneous coordinates ``[a:b:x:y]``."""

    a: int
    b: int
    x: int
    y: int

    @property
    def v1(self) -> WaveVec:
        return WaveVec(self.a, self.b)

    @property
    def v2(self) -> WaveVec:
        return WaveVec(self.x - self.a, self.y - self.b)

    @property
    def v3(self) -> WaveVec:
        return WaveVec(self.x, self.y)


class TriadClass(str, enum.Enum):
    SINGLE_WAVE = "single_wave"
    ZONAL = "zonal"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class Triad:
    """Three wavevectors with ``v1 + v2 == v3`` holding by construction."""

    v1: WaveVec
    v2: WaveVec
    v3: WaveVec
    cls: TriadClass

    @classmethod
    def from_quad(cls, q) -> "Triad":
        q = Quad(*q)
        return cls(q.v1, q.v2, q.v3, classify_triad(q))

    @classmethod
    def from_vectors(cls, v1, v3) -> "Triad":
        return cls.from_quad((v1[0], v1[1], v3[0], v3[1]))

    def to_quad(self) -> Quad:
        return Quad(self.v1.k, self.v1.l, self.v3.k, self.v3.l)


@dataclass(frozen=True)
class DispersionParams:
    """Planetary vorticity gradient. Only used to turn beta-coefficients into numbers."""

    beta: float | Fraction = 1

    def __post_init__(self):
        if not self.beta > 0:
            raise TriadError(f"beta must be positive, got {self.beta!r}")

    def frequency(self, v):
        return self.beta * omega(v)


def resonance_defect(q) -> int:
    """Polynomial form of the resonance condition; zero iff ``[a:b:x:y]`` is on the surface."""
    a, b, x, y = q
    n1 = a * a + b * b
    n3 = x * x + y * y
    cross = 2 * a * x + 2 * b * y
    return x * n1 * (n1 - cross) - a * n3 * (n3 - cross)


def _vanishing_wave(q) -> bool:
    a, b, x, y = q
    return (a == 0 and b == 0) or (x == 0 and y == 0) or (a == x and b == y)


def on_x_circ(q) -> bool:
    """True iff the quadruple solves the un-cleared equation (all denominators nonzero).

    Over the integers the only extra points of the cleared surface lie on the
    three real lines where one of the wavevectors vanishes.
    """
    return resonance_defect(q) == 0 and not _vanishing_wave(q)


def classify_triad(q) -> TriadClass:
    if resonance_defect(q) != 0:
        raise NotOnSurfaceError(f"{tuple(q)} does not satisfy the resonance equation")
    if _vanishing_wave(q):
        return TriadClass.SINGLE_WAVE
    a, _, x, _ = q
    if a * x * (a - x) == 0:
        return TriadClass.ZONAL
    return TriadClass.NONTRIVIAL


def omega(v) -> Fraction:
    """Rossby frequency of ``v`` in units of beta: ``-k / (k^2 + l^2)``."""
    k, l = v
    n = k * k + l * l
    if n == 0:
        raise ZeroVectorError("frequency of the zero wavevector is undefined")
    return Fraction(-k, n)


def resonates_via_omega(t) -> bool:
    """Direct frequency test ``omega(v1) + omega(v2) == omega(v3)``.

    Accepts a :class:`Triad` or any ``(v1, v2, v3)`` triple.
    """
    v1, v2, v3 = (t.v1, t.v2, t.v3) if isinstance(t, Triad) else t
    if (v1[0] + v2[0], v1[1] + v2[1]) != tuple(v3):
        raise TriadError("wavevectors do not close: v1 + v2 != v3")
    return omega(v1) + omega(v2) == omega(v3)


def group_velocity(v) -> tuple[Fraction, Fraction]:
    k, l = v
    n = k * k + l * l
    if n == 0:
        raise ZeroVectorError("group velocity of the zero wavevector is undefined")
    return Fraction(k * k - l * l, n * n), Fraction(2 * k * l, n * n)


def canonicalize(q) -> tuple[Quad, int]:
    """Primitive representative with first nonzero coordinate positive.

    Returns ``(rep, scale)`` with ``q == scale * rep``.
    """
    g = math.gcd(*q)
    if g == 0:
        raise TriadError("the zero quadruple has no projective class")
    for c in q:
        if c:
            if c < 0:
                g = -g
            break
    return Quad(*(c // g for c in q)), g


def primitive(q) -> Quad:
    """Divide out the gcd but keep the sign (the symmetry group acts on signed quads)."""
    g = math.gcd(*q)
    if g == 0:
        raise TriadError("the zero quadruple has no projective class")
    return Quad(*(c // g for c in q))


def _negate(q):
    a, b, x, y = q
    return Quad(-a, -b, -x, -y)


def _swap(q):
    a, b, x, y = q
    return Quad(x, y, a, b)


def _flip_sum(q):
    a, b, x, y = q
    return Quad(a, b, a - x, b - y)


def _reflect(q):
    a, b, x, y = q
    return Quad(a, -b, x, -y)


SYMMETRY_GENERATORS = (_negate, _swap, _flip_sum, _reflect)


def symmetry_orbit(q) -> frozenset[Quad]:
    """Closure of ``q`` under the four generators of the order-24 symmetry group.

    The orbit lives on signed primitive quadruples (negation is one of the
    generators, so sign normalisation would halve it); a generic orbit has 24
    elements.
    """
    start = primitive(q)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for g in SYMMETRY_GENERATORS:
            img = g(cur)
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return frozenset(seen)
