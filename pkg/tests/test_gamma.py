import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_stark.gamma import (
    continuity_margin,
    gamma_int,
    gamma_p,
    gamma_p_direct,
    gamma_p_rational,
    reflection_sign,
)
from padic_stark.padic import PadicNumber, padic_from_rational, vp

PRIMES = [3, 5, 7, 13]


def test_small_values():
    assert gamma_p(3, 8, 7).equals(-2)
    assert gamma_p(1, 8, 5).equals(-1)
    assert gamma_p(2, 8, 5).equals(1)
    assert gamma_p(padic_from_rational(-1, 1, 5, 12), 8).equals(1)


def test_frozen_value_at_one_third():
    assert gamma_p_rational(1, 3, 7, 6).lift() == 36628


def test_rational_at_one():
    for p in PRIMES:
        assert gamma_p_rational(1, 1, p, 8).equals(-1)


@pytest.mark.parametrize("p", PRIMES)
def test_factorial_formula(p):
    for m in range(1, p + 1):
        assert gamma_p(m, 8, p).equals((-1) ** m * math.factorial(m - 1))


@pytest.mark.parametrize("p", PRIMES)
def test_fast_path_matches_direct_product(p):
    rng = random.Random(p)
    M = 4
    for _ in range(40):
        m = rng.randrange(1, p ** (M + continuity_margin(p)))
        assert gamma_int(m, p, M) == gamma_p_direct(m, p, M)


@pytest.mark.parametrize("p", PRIMES)
def test_representative_independence(p):
    M = 5
    K = M + continuity_margin(p)
    rng = random.Random(7 * p)
    for _ in range(20):
        m = rng.randrange(1, p**K)
        assert gamma_int(m, p, M) == gamma_int(m + p**K, p, M)


@given(st.sampled_from(PRIMES), st.integers(-500, 500), st.integers(1, 60))
def test_reflection(p, a, N):
    if N % p == 0:
        N += 1
    z = padic_from_rational(a, N, p, 12) if a else PadicNumber.zero(p, 12)
    w = padic_from_rational(N - a, N, p, 12) if N != a else PadicNumber.zero(p, 12)
    assert (gamma_p(z, 8) * gamma_p(w, 8)).equals(reflection_sign(z))


@given(st.sampled_from([5, 7, 13]), st.integers(1, 10**6), st.integers(0, 10**6))
def test_continuity(p, x, y):
    d = x - y
    if d == 0:
        return
    k = min(int(vp(d, p)), 6)
    if k == 0:
        return
    assert (gamma_int(x, p, k) - gamma_int(y, p, k)) % p**k == 0


def test_negative_valuation_rejected():
    with pytest.raises(ValueError):
        gamma_p(padic_from_rational(1, 7, 7, 8), 8)
    with pytest.raises(ValueError):
        gamma_p_rational(1, 14, 7, 8)
