import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from splitvar.cyclotomic import (
    CycloNum,
    cyclo_to_prime_field,
    cyclotomic_poly,
    primitive_root_of_unity,
    totient,
    zeta_pow,
)

# Phi_n coefficients (lowest degree first), frozen from an independent CAS run
PHI = {
    1: [-1, 1],
    2: [1, 1],
    3: [1, 1, 1],
    4: [1, 0, 1],
    5: [1, 1, 1, 1, 1],
    6: [1, -1, 1],
    7: [1, 1, 1, 1, 1, 1, 1],
    8: [1, 0, 0, 0, 1],
    9: [1, 0, 0, 1, 0, 0, 1],
    10: [1, -1, 1, -1, 1],
    12: [1, 0, -1, 0, 1],
    15: [1, -1, 0, 1, -1, 1, 0, -1, 1],
}

ORDERS = [2, 3, 4, 5, 6, 7, 8, 12]


def numeric(x: CycloNum) -> complex:
    z = cmath.exp(2j * cmath.pi / x.order)
    return sum(float(c) * z**k for k, c in enumerate(x.coeffs))


def cyclo(order):
    deg = totient(order)
    return st.lists(
        st.fractions(min_value=-20, max_value=20, max_denominator=12),
        min_size=deg,
        max_size=deg,
    ).map(lambda cs: CycloNum(order, cs))


@st.composite
def same_field(draw, k=3):
    order = draw(st.sampled_from(ORDERS))
    return [draw(cyclo(order)) for _ in range(k)]


@pytest.mark.parametrize("n,coeffs", sorted(PHI.items()))
def test_cyclotomic_poly_matches_oracle(n, coeffs):
    assert list(cyclotomic_poly(n)) == coeffs


def test_zeta_three_relations():
    z = zeta_pow(3, 1)
    assert z**3 == 1
    assert z**2 + z + 1 == 0
    assert zeta_pow(3, -1) == -1 - z
    assert (1 - z) * (1 - z**2) == 3
    assert (1 - z).inverse() == CycloNum(3, [Fraction(2, 3), Fraction(1, 3)])


def test_inverse_in_q_zeta5_matches_oracle():
    x = CycloNum(5, [1, -1, 0, 2])
    assert x.inverse() == CycloNum(5, [Fraction(12, 41), Fraction(9, 41), Fraction(20, 41), Fraction(7, 41)])


def test_power_in_q_zeta7_matches_oracle():
    assert (2 + zeta_pow(7, 1)) ** 7 == CycloNum(7, [115, 434, 658, 546, 266, 70])


@pytest.mark.parametrize("n", ORDERS)
def test_zeta_has_exact_order(n):
    z = CycloNum.zeta(n)
    assert z**n == 1
    assert all(z**k != 1 for k in range(1, n))


def test_rejects_bad_order_and_mixing():
    with pytest.raises(ValueError):
        zeta_pow(1, 1)
    with pytest.raises(ValueError):
        CycloNum.zeta(3) + CycloNum.zeta(5)
    with pytest.raises(ZeroDivisionError):
        CycloNum.zero(3).inverse()


@given(same_field())
def test_field_axioms(xs):
    a, b, c = xs
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(same_field(2))
def test_float_cross_check(xs):
    a, b = xs
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6 * (1 + abs(numeric(a)) * abs(numeric(b)))
    assert abs(numeric(a + b) - numeric(a) - numeric(b)) < 1e-9 * (1 + abs(numeric(a)) + abs(numeric(b)))


@given(st.sampled_from(ORDERS).flatmap(cyclo))
def test_inverse_property(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1
    assert a / a == 1


@given(st.sampled_from(ORDERS).flatmap(cyclo))
def test_json_round_trip(a):
    assert CycloNum.from_json(a.order, a.to_json()) == a
    assert hash(CycloNum.from_json(a.order, a.to_json())) == hash(a)


def test_rational_hash_agrees_with_fraction():
    assert hash(CycloNum.scalar(3, Fraction(1, 2))) == hash(Fraction(1, 2))
    assert CycloNum.scalar(5, 4) == 4


def test_prime_field_image():
    assert primitive_root_of_unity(7, 3) == 2
    assert primitive_root_of_unity(13, 3) == 3
    assert cyclo_to_prime_field(CycloNum.scalar(3, Fraction(1, 3)), 7, 2) == 5
    assert cyclo_to_prime_field(zeta_pow(3, 2), 7, 2) == 4
    with pytest.raises(ValueError):
        primitive_root_of_unity(5, 3)
    with pytest.raises(ValueError):
        cyclo_to_prime_field(zeta_pow(3, 1), 7, 1)


@given(st.sampled_from([(7, 3), (13, 3), (11, 5), (31, 5)]), st.data())
def test_prime_field_map_is_a_ring_map(qn, data):
    q, n = qn
    r = primitive_root_of_unity(q, n)
    a = data.draw(cyclo(n).filter(lambda x: all(c.denominator % q for c in x.coeffs)))
    b = data.draw(cyclo(n).filter(lambda x: all(c.denominator % q for c in x.coeffs)))
    fa, fb = cyclo_to_prime_field(a, q, r), cyclo_to_prime_field(b, q, r)
    assert cyclo_to_prime_field(a * b, q, r) == fa * fb % q
    assert cyclo_to_prime_field(a + b, q, r) == (fa + fb) % q
