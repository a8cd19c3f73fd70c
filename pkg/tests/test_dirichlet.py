from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_stark.dirichlet import (
    CyclotomicNumber,
    PadicEmbedding,
    bernoulli_b1,
    classical_l_at_zero,
    enumerate_characters,
    euler_phi,
    kronecker,
    kronecker_character,
    primitive_odd_characters,
)


def test_cyclotomic_relations():
    z = CyclotomicNumber.root_power(5, 1)
    acc = CyclotomicNumber.rational(5, 0)
    for k in range(5):
        acc = acc + CyclotomicNumber.root_power(5, k)
    assert acc.is_zero()
    assert CyclotomicNumber.root_power(12, 6) == CyclotomicNumber.rational(12, -1)
    assert (z * z * z * z * z) == CyclotomicNumber.rational(5, 1)


@given(st.sampled_from([3, 4, 5, 7, 8, 12]), st.lists(st.integers(-5, 5), min_size=12, max_size=12),
       st.lists(st.integers(-5, 5), min_size=12, max_size=12))
def test_cyclotomic_ring_axioms(m, a, b):
    x = sum((CyclotomicNumber.root_power(m, k) * c for k, c in enumerate(a)), CyclotomicNumber.rational(m, 0))
    y = sum((CyclotomicNumber.root_power(m, k) * c for k, c in enumerate(b)), CyclotomicNumber.rational(m, 0))
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x


@pytest.mark.parametrize("N", [3, 4, 5, 7, 8, 9, 12, 15, 16, 20])
def test_character_group_has_phi_elements(N):
    chars = enumerate_characters(N)
    assert len(chars) == euler_phi(N)
    assert len({c.exps for c in chars}) == euler_phi(N)


def test_quadratic_characters_and_l_values():
    chi3, chi4 = kronecker_character(-3), kronecker_character(-4)
    assert chi3.is_odd() and chi3.conductor == 3
    assert chi4.is_odd() and chi4.conductor == 4
    assert classical_l_at_zero(chi3).to_fraction() == Fraction(1, 3)
    assert classical_l_at_zero(chi4).to_fraction() == Fraction(1, 2)
    assert bernoulli_b1(kronecker_character(-23)).to_fraction() == -3


def test_primitive_odd_characters_of_conductor_seven():
    chars = primitive_odd_characters(7)
    assert sorted(c.order for c in chars) == [2, 6, 6]
    for c in chars:
        assert c.conj().conj().exps == c.exps


@given(st.integers(-200, 200).filter(lambda d: d % 4 in (0, 1) and d), st.integers(1, 300), st.integers(1, 300))
def test_kronecker_multiplicative_in_n(d, m, n):
    assert kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n)


def test_embedding_respects_multiplication():
    chi = [c for c in primitive_odd_characters(7) if c.order == 6][0]
    emb = PadicEmbedding(13, 6, 8)
    for a in range(1, 7):
        for b in range(1, 7):
            assert emb(chi(a) * chi(b)).equals(emb(chi(a * b)))
    with pytest.raises(ValueError):
        PadicEmbedding(11, 6, 8)


def test_embedding_twists_are_galois_conjugates():
    chi = [c for c in primitive_odd_characters(7) if c.order == 6][0]
    e1, e5 = PadicEmbedding(13, 6, 8), PadicEmbedding(13, 6, 8, twist=5)
    for a in range(1, 7):
        assert e5(chi(a)).equals(e1(chi.conj()(a)))
