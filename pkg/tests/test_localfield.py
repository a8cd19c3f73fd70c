import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_stark.localfield import (
    EisensteinExtension,
    embed,
    make_unramified,
    trace_to_prime_field,
)

FIELDS = [(3, 2), (5, 2), (7, 1), (13, 1)]


def tower(p, f, prec=6):
    F = make_unramified(p, f, prec)
    return F, EisensteinExtension(F)


@pytest.mark.parametrize("p,f", FIELDS)
def test_pi_relation(p, f):
    F, E = tower(p, f)
    assert (E.pi() ** (p - 1) + embed(F, p, E.default_pi_prec)).is_zero()


@pytest.mark.parametrize("p,f", FIELDS)
def test_zeta_p_is_a_primitive_root_of_unity(p, f):
    F, E = tower(p, f)
    z = E.zeta_p()
    assert (z**p - E.one()).is_zero()
    assert not (z - E.one()).is_zero()
    assert (z - E.one()).valuation() == 1


@pytest.mark.parametrize("p,f", FIELDS)
def test_generator_has_full_order(p, f):
    F, _ = tower(p, f)
    g = F.generator
    q = F.q
    for r in {(q - 1) // ell for ell in range(2, q) if (q - 1) % ell == 0 and all(ell % d for d in range(2, ell))}:
        assert F.residue_pow(g, r) != F.zq(1)
    assert F.residue_pow(g, q - 1) == F.zq(1)


@pytest.mark.parametrize("p,f", FIELDS)
def test_teichmuller_lift_has_order_dividing_q_minus_1(p, f):
    F, _ = tower(p, f)
    t = F.teichmuller(F.generator, F.prec)
    assert F.zq_pow(t, F.q - 1, F.prec) == F.zq(1)


def test_trace_is_additive_and_frobenius_invariant():
    F, _ = tower(5, 2)
    els = list(F.residue_elements())[:12]
    for x in els:
        assert trace_to_prime_field(F, F.frobenius(x)) == trace_to_prime_field(F, x)
        for y in els[:4]:
            s = tuple((a + b) % 5 for a, b in zip(x, y))
            assert trace_to_prime_field(F, s) == (trace_to_prime_field(F, x) + trace_to_prime_field(F, y)) % 5


coords = st.lists(st.lists(st.integers(0, 5**8), min_size=2, max_size=2), min_size=4, max_size=4)


@given(coords, coords)
def test_ring_axioms_in_the_tower(a, b):
    F, E = tower(5, 2, 8)
    a[0][0] = a[0][0] * 5 + 1
    x, y = E.element(a), E.element(b)
    assert (x * y - y * x).is_zero()
    assert ((x + y) - y - x).is_zero()
    assert (x * x.inverse() - E.one()).is_zero()


@given(coords)
def test_div_pi_power_inverts_multiplication(a):
    _, E = tower(5, 2, 8)
    x = E.element(a)
    y = x * E.pi() ** 3
    assert (y.div_pi_power(3) - x).valuation() >= E.default_pi_prec - 3
