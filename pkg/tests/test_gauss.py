import pytest

from padic_stark.gauss import (
    DEFAULT_MATRIX,
    GaussSumInstance,
    conjugate_product_check,
    gauss_sum,
    gauss_valuation,
    gross_koblitz_verify,
    jacobi_sum,
    power_residue_character,
    stickelberger_data,
    stickelberger_digits,
)

CASES = [(p, N, a) for p, N in DEFAULT_MATRIX for a in range(1, N)]


@pytest.mark.parametrize("p,N,a", CASES)
def test_gross_koblitz(p, N, a):
    r = gross_koblitz_verify(GaussSumInstance(p, N, a, 8))
    assert r.passed, r.to_record()


@pytest.mark.parametrize("p,N,a", CASES)
def test_stickelberger_valuation(p, N, a):
    inst = GaussSumInstance(p, N, a, 4)
    s = stickelberger_data(inst)
    assert s.exponent_check
    assert gauss_valuation(inst) == s.digit_sum


@pytest.mark.parametrize("p,N", [(7, 3), (5, 4), (13, 3), (7, 4)])
def test_jacobi_sum_is_independent_of_the_additive_character(p, N):
    inst = GaussSumInstance(p, N, 1, 5)
    J1 = jacobi_sum(inst, c=1)
    J2 = jacobi_sum(inst, c=2)
    assert (J1 - J2).is_zero()


@pytest.mark.parametrize("p,N,a", [(7, 3, 1), (5, 4, 3), (5, 3, 2), (11, 5, 2)])
def test_conjugate_product_is_plus_q(p, N, a):
    inst = GaussSumInstance(p, N, a, 5)
    c = conjugate_product_check(inst)
    assert c.valuation_g + c.valuation_gbar == (p - 1) * inst.f
    assert c.sign == 1


@pytest.mark.parametrize("p,N", [(3, 13), (5, 31), (3, 11), (5, 3)])
def test_digit_rotation_under_multiplication_by_p(p, N):
    for a in range(1, N):
        inst = GaussSumInstance(p, N, a, 4)
        z = stickelberger_digits(inst)
        assert stickelberger_digits(inst.with_a(p * a % N)) == z[-1:] + z[:-1]


def test_valuation_pattern_follows_the_rotation():
    inst = GaussSumInstance(5, 3, 1, 4)
    rotated = inst.with_a(5)
    assert gauss_valuation(rotated) == sum(stickelberger_digits(rotated)) == gauss_valuation(inst)


def test_power_residue_character_is_multiplicative():
    inst = GaussSumInstance(5, 4, 1, 4)
    F = make_field(inst)
    els = [x for x in F.residue_elements() if any(x)][:10]
    for x in els:
        for y in els[:5]:
            lhs = power_residue_character(inst, F.residue_mul(x, y))
            rhs = power_residue_character(inst, x) * power_residue_character(inst, y)
            assert (lhs - rhs).is_zero()
    assert (power_residue_character(inst, F.zq(1)) - power_residue_character(inst, F.zq(1)) ** 2).is_zero()


def test_character_of_a_generator_is_primitive():
    inst = GaussSumInstance(7, 3, 1, 4)
    F = make_field(inst)
    chi = power_residue_character(inst, F.generator)
    assert not (chi - chi**0).is_zero()
    assert (chi**3 - chi**0).is_zero()


def test_bad_instances():
    with pytest.raises(ValueError):
        GaussSumInstance(7, 14, 1)
    with pytest.raises(ValueError):
        GaussSumInstance(3, 4, 4)


def test_gauss_sum_has_expected_pi_valuation_on_f2():
    inst = GaussSumInstance(5, 3, 1, 4)
    assert inst.f == 2
    assert gauss_sum(inst).valuation() == sum(stickelberger_digits(inst))


def make_field(inst):
    from padic_stark.gauss import _tables

    return _tables(inst).F
