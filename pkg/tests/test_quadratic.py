from fractions import Fraction

import pytest

from padic_stark.quadratic import (
    RANK_ONE_MATRIX,
    ImaginaryQuadraticField,
    class_number,
    dirichlet_check,
    embedding_root,
    fundamental_discriminants,
    is_fundamental,
    reduced_forms,
    smallest_split_prime,
    split_prime_generator,
    valuation_identity_check,
    verify_rank_one,
)


def test_class_numbers():
    known = {-3: 1, -4: 1, -7: 1, -8: 1, -15: 2, -20: 2, -23: 3, -47: 5, -71: 7, -84: 4, -163: 1}
    for d, h in known.items():
        assert class_number(d) == h


def test_reduced_forms_of_minus_23():
    assert sorted(reduced_forms(-23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]


def test_fundamental_discriminants():
    assert is_fundamental(-4) and is_fundamental(-8) and not is_fundamental(-16) and not is_fundamental(-12 * 4)
    ds = fundamental_discriminants(30)
    assert ds == [-3, -4, -7, -8, -11, -15, -19, -20, -23, -24]


def test_unit_counts():
    assert ImaginaryQuadraticField(-3).w == 6
    assert ImaginaryQuadraticField(-4).w == 4
    assert ImaginaryQuadraticField(-23).w == 2


def test_square_root_of_minus_four_mod_five():
    r = embedding_root(-4, 5, 3)
    assert r % 5 == 1 and (r * r + 4) % 125 == 0
    assert embedding_root(-4, 5, 1) == 1
    assert (embedding_root(-4, 5, 2)) == 11


def test_smallest_split_prime_for_minus_23():
    assert smallest_split_prime(-23) == 3


def test_generator_of_a_power_of_the_split_prime():
    data = split_prime_generator(-23, 3, 10)
    assert data.h == 3
    assert data.alpha.norm == 27


@pytest.mark.parametrize("d,p", RANK_ONE_MATRIX)
def test_rank_one_identity(d, p):
    r = verify_rank_one(d, p, 10)
    assert r.passed, r.to_record()


def test_frozen_regulator_for_minus_23():
    r = verify_rank_one(-23, 3, 10)
    assert r.regulator.lift() % 3**10 == 9517


@pytest.mark.parametrize("d", [-3, -4, -7, -8, -23, -47, -71, -163, -420])
def test_class_number_formula(d):
    r = dirichlet_check(d)
    assert r.passed
    assert r.minus_b1 == Fraction(2 * r.h, r.w)


@pytest.mark.parametrize("d", [-3, -4, -7, -23])
def test_valuation_identity(d):
    assert valuation_identity_check(d).passed


def test_non_split_prime_rejected():
    with pytest.raises(ValueError):
        split_prime_generator(-4, 7, 6)
