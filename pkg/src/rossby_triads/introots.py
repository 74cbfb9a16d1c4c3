"""Integer roots of integer polynomials on a bounded interval.

``integer_roots`` is exact: it splits the interval into runs on which the
integer sequence p(k) is monotone (found recursively from the forward
difference polynomial, which has lower degree) and bisects each run.

``batch_integer_roots`` handles many polynomials of the same degree at once:
roots are located with floating-point companion eigenvalues, and every nearby
integer is then checked exactly (first modulo two primes, then in full).
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

__all__ = ["poly_eval", "forward_difference", "integer_roots", "locate_integer_roots", "batch_integer_roots", "PRIMES"]

PRIMES = (2147483629, 2147483587)


def poly_eval(c: Sequence[int], k: int) -> int:
    """Horner evaluation, coefficients leading first."""
    acc = 0
    for ci in c:
        acc = acc * k + ci
    return acc


def _strip(c):
    c = list(c)
    while len(c) > 1 and c[0] == 0:
        c.pop(0)
    return c


def forward_difference(c: Sequence[int]) -> list[int]:
    """Coefficients of p(k+1) - p(k)."""
    c = _strip(c)
    n = len(c) - 1
    # p(k+1) = sum_i c_i (k+1)^(n-i); expand binomially into ascending powers
    asc = [0] * (n + 1)
    for i, ci in enumerate(c):
        d = n - i
        for j in range(d + 1):
            asc[j] += ci * math.comb(d, j)
    desc = asc[::-1]
    out = [desc[i] - c[i] for i in range(n + 1)]
    return _strip(out[1:]) if len(out) > 1 else [0]


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _last_with_sign(c, lo, hi, s0):
    """Largest k in [lo, hi] with sign(p(k)) == s0, given p monotone on [lo, hi] and sign(p(lo)) == s0."""
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _sign(poly_eval(c, mid)) == s0:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _monotone_runs(c, lo, hi) -> list[int]:
    """Breakpoints lo = b0 < b1 < ... = hi with p monotone on integers of each [b_i, b_{i+1}]."""
    if hi - lo <= 1 or len(_strip(c)) <= 2:
        return [lo, hi]
    d = forward_difference(c)
    cuts = {lo, hi}
    runs = _monotone_runs(d, lo, hi - 1)
    for r0, r1 in zip(runs, runs[1:]):
        # d is monotone on [r0, r1]: its sign changes at most once through zero
        s0 = _sign(poly_eval(d, r0))
        s1 = _sign(poly_eval(d, r1))
        if s0 == s1 or s0 == 0 or s1 == 0:
            if s0 == 0 and s1 != 0:
                cuts.add(r0)
            if s1 == 0 and s0 != 0:
                cuts.add(r1)
            continue
        cuts.add(_last_with_sign(d, r0, r1, s0) + 1)
    return sorted(cuts)


def integer_roots(c: Sequence[int], lo: int, hi: int) -> list[int]:
    """All integers k in [lo, hi] with p(k) == 0, for a nonzero integer polynomial."""
    c = _strip([int(v) for v in c])
    if c == [0]:
        raise ValueError("the zero polynomial has every integer as a root")
    if lo > hi:
        return []
    if len(c) == 1:
        return []
    roots = set()
    br = _monotone_runs(c, lo, hi)
    for u, v in zip(br, br[1:]):
        # p is monotone on this run, so its zeros form one contiguous block
        su, sv = _sign(poly_eval(c, u)), _sign(poly_eval(c, v))
        k = u
        while su == 0 and k <= v and poly_eval(c, k) == 0:
            roots.add(k)
            k += 1
        k = v
        while sv == 0 and k >= u and poly_eval(c, k) == 0:
            roots.add(k)
            k -= 1
        if su * sv < 0:
            k = _last_with_sign(c, u, v, su) + 1
            while k <= v and poly_eval(c, k) == 0:
                roots.add(k)
                k += 1
    return sorted(roots)


def _mod_eval(coeff_mods, y, prime):
    acc = np.zeros_like(y)
    for cm in coeff_mods:
        acc = (acc * y + cm) % prime
    return acc


def locate_integer_roots(coeffs: np.ndarray, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Candidate ``(row, k)`` pairs covering every integer root in [lo, hi].

    ``coeffs`` is a float array of shape (n, d+1), leading coefficient first and
    nonzero. Candidates are the integers within one unit of the real part of
    each eigenvalue of the companion matrix whose imaginary part is below one;
    callers must still verify them exactly.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    n, deg = coeffs.shape[0], coeffs.shape[1] - 1
    comp = np.zeros((n, deg, deg))
    comp[:, 0, :] = -coeffs[:, 1:] / coeffs[:, :1]
    for j in range(1, deg):
        comp[:, j, j - 1] = 1.0
    with np.errstate(all="ignore"):
        eig = np.linalg.eigvals(comp)
    near_real = np.abs(eig.imag) < 1.0 + 1e-9 * np.abs(eig.real)
    base = np.floor(np.clip(np.nan_to_num(eig.real), lo - 2, hi + 2)).astype(np.int64)
    rows, ks = [], []
    for off in (-1, 0, 1, 2):
        cy = base + off
        idx = np.nonzero(near_real & (cy >= lo) & (cy <= hi))
        rows.append(idx[0])
        ks.append(cy[idx])
    ri = np.concatenate(rows)
    ki = np.concatenate(ks)
    if ri.size:
        pairs = np.unique(np.stack([ri, ki], axis=1), axis=0)
        ri, ki = pairs[:, 0], pairs[:, 1]
    return ri, ki


def batch_integer_roots(rows: Sequence[Sequence[int]], lo: int, hi: int) -> list[list[int]]:
    """Integer roots in [lo, hi] of each polynomial in ``rows`` (same degree, nonzero leading term)."""
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return []
    deg = len(rows[0]) - 1
    if any(len(r) != deg + 1 or r[0] == 0 for r in rows):
        raise ValueError("rows must share one degree with nonzero leading coefficients")
    ri, yi = locate_integer_roots(np.array([[float(v) for v in r] for r in rows]), lo, hi)
    for prime in PRIMES:
        if ri.size == 0:
            break
        coeff_mods = [np.array([rows[i][j] % prime for i in ri.tolist()], dtype=np.int64)
                      for j in range(deg + 1)]
        keep = _mod_eval(coeff_mods, yi % prime, prime) == 0
        ri, yi = ri[keep], yi[keep]
    out: list[list[int]] = [[] for _ in rows]
    for i, y in zip(ri.tolist(), yi.tolist()):
        if poly_eval(rows[i], y) == 0:
            out[i].append(y)
    return out
