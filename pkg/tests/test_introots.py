import numpy as np
import pytest
from hypothesis import given, strategies as st

from rossby_triads.introots import batch_integer_roots, forward_difference, integer_roots, poly_eval

small = st.integers(-40, 40)


def from_roots(lead, roots, shift=0):
    c = [lead]
    for r in roots:
        c = [u - r * v for u, v in zip(c + [0], [0] + c)]
    c[-1] += shift
    return c


def brute(c, lo, hi):
    return [k for k in range(lo, hi + 1) if poly_eval(c, k) == 0]


@given(st.sampled_from([1, -1, 2, -3, 7]), st.lists(small, max_size=4), st.integers(-3, 3))
def test_integer_roots_match_brute_force(lead, roots, shift):
    c = from_roots(lead, roots, shift)
    if not any(c):
        return
    assert integer_roots(c, -50, 50) == brute(c, -50, 50)


@given(st.sampled_from([1, -1, 2, -3, 7]), st.lists(small, min_size=1, max_size=4), st.integers(-3, 3))
def test_batch_matches_exact(lead, roots, shift):
    c = from_roots(lead, roots, shift)
    assert batch_integer_roots([c], -50, 50)[0] == brute(c, -50, 50)


def test_repeated_and_clustered_roots():
    c = from_roots(1, [5, 5, 6, 6])
    assert integer_roots(c, -100, 100) == [5, 6]
    assert batch_integer_roots([c], -100, 100) == [[5, 6]]


def test_huge_coefficients():
    big = 10 ** 15 + 37
    c = from_roots(3, [big, -big + 1, 12])
    assert integer_roots(c, -2 * big, 2 * big) == [-big + 1, 12, big]


def test_forward_difference():
    c = [2, -3, 0, 5]
    d = forward_difference(c)
    for k in range(-10, 10):
        assert poly_eval(d, k) == poly_eval(c, k + 1) - poly_eval(c, k)


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        integer_roots([0, 0], 0, 3)
    assert integer_roots([5], -3, 3) == []
    with pytest.raises(ValueError):
        batch_integer_roots([[1, 2], [1, 2, 3]], 0, 1)
