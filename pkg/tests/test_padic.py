from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from padic_stark.padic import (
    INF,
    PadicNumber,
    hensel_sqrt,
    iwasawa_log,
    padic_exp,
    padic_from_rational,
    teichmuller,
    teichmuller_int,
    vp,
)

PRIMES = st.sampled_from([3, 5, 7, 13])
NONZERO = st.integers(-10**6, 10**6).filter(bool)


def rat(p, n, d, prec=10):
    return padic_from_rational(n, d, p, prec)


def test_one_third_mod_seven_to_the_fourth():
    x = rat(7, 1, 3, 4)
    assert x.lift() == 1601
    assert (x * 3).equals(1)


def test_valuation_and_zero_state():
    x = rat(5, 50, 3)
    assert x.valuation == 2 and x.unit % 5
    z = PadicNumber.zero(5, 7)
    assert z.is_zero() and z.absprec == 7
    assert PadicNumber.zero(5).absprec == INF


def test_from_absolute_drops_to_zero():
    x = PadicNumber.from_absolute(5**4, 5, 3)
    assert x.is_zero() and x.absprec == 3


def test_record_round_trip():
    for x in [rat(7, -22, 9), PadicNumber.zero(7, 5), rat(3, 1, 81)]:
        assert PadicNumber.from_record(x.to_record()) == x


def test_log_of_p_and_roots_of_unity_vanish():
    assert iwasawa_log(rat(7, 7, 1)).is_zero()
    w = teichmuller(rat(7, 3, 1))
    assert iwasawa_log(w).is_zero()


def test_teichmuller_is_a_root_of_unity():
    for p in (5, 7, 13):
        for a in range(1, p):
            w = teichmuller_int(a, p, 8)
            assert pow(w, p - 1, p**8) == 1 and w % p == a


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        rat(5, 1, 1) / PadicNumber.zero(5)


@given(PRIMES, NONZERO, NONZERO, NONZERO, NONZERO)
def test_field_axioms(p, a, b, c, d):
    assume(a % p and c % p)
    x, y = rat(p, a, b if b % p else b + 1), rat(p, c, d if d % p else d + 1)
    assert (x + y).equals(y + x)
    assert (x * y).equals(y * x)
    assert ((x + y) - y).equals(x)
    assert ((x * y) / y).equals(x)


@given(PRIMES, NONZERO, st.integers(1, 10**6))
def test_from_rational_matches_fraction(p, n, d):
    assume(d % p)
    x = rat(p, n, d, 12)
    r = Fraction(n, d) - x.to_fraction()
    assert r == 0 or vp(r.numerator, p) - vp(r.denominator, p) >= x.absprec


@given(PRIMES, NONZERO, NONZERO)
def test_log_is_additive(p, a, b):
    assume(a % p and b % p)
    x, y = rat(p, a, 1), rat(p, b, 1)
    assert iwasawa_log(x * y).equals(iwasawa_log(x) + iwasawa_log(y))


@given(PRIMES, st.integers(1, 10**6))
def test_exp_inverts_log_on_principal_units(p, a):
    x = rat(p, p * a, 1, 12)
    y = padic_exp(x)
    assert iwasawa_log(y).equals(x)


@given(PRIMES, NONZERO)
def test_hensel_sqrt_squares_back(p, a):
    assume(a % p)
    a2 = a * a
    r = hensel_sqrt(a2, p, 10)
    assert (r * r - a2) % p**10 == 0
