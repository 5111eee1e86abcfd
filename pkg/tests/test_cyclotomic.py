"""Canonical-form cyclotomic arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primejac import (
    CyclotomicNumber,
    InvalidInputError,
    as_rational,
    format_rational,
    inv_one_minus_zeta,
    is_odd_prime,
    parse_rational,
    zeta_pow,
)

PRIMES = (3, 5, 7, 11, 13)


def rationals(max_num=9, max_den=4):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def elements(p):
    return st.builds(
        lambda coords: CyclotomicNumber(p, coords),
        st.tuples(*([rationals()] * (p - 1))),
    )


def test_is_odd_prime():
    assert [n for n in range(2, 32) if is_odd_prime(n)] == [
        3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
    ]
    assert not is_odd_prime(2)
    assert not is_odd_prime(1)
    assert not is_odd_prime(-3)


def test_rational_normalization_and_formatting():
    assert as_rational(Fraction(4, 2)) == 2
    assert isinstance(as_rational(Fraction(4, 2)), int)
    assert as_rational(Fraction(1, 2)) == Fraction(1, 2)
    assert format_rational(5) == "5/1"
    assert format_rational(Fraction(-2, 3)) == "-2/3"
    assert parse_rational("5/1") == 5
    assert parse_rational("-2/3") == Fraction(-2, 3)
    assert parse_rational("7") == 7


def test_zeta_pow_basis_vectors():
    assert zeta_pow(3, 1).coords == (1, 0)
    assert zeta_pow(3, 3).coords == (-1, -1)  # zeta^3 = 1, reduced
    assert zeta_pow(5, 7).coords == (0, 1, 0, 0)  # 7 mod 5 = 2
    assert zeta_pow(5, -1) == zeta_pow(5, 4)


def test_zeta_pow_rejects_bad_prime():
    with pytest.raises(InvalidInputError):
        zeta_pow(4, 1)
    with pytest.raises(InvalidInputError):
        zeta_pow(2, 1)


def test_addition():
    z, z2 = zeta_pow(3, 1), zeta_pow(3, 2)
    assert (z + z2).coords == (1, 1)
    x = CyclotomicNumber(3, (Fraction(1, 2), -4))
    assert (x + CyclotomicNumber.zero(3)) == x
    one = CyclotomicNumber.one(3)
    assert (one + one).coords == (-2, -2)  # 2 = -2 zeta - 2 zeta^2


def test_addition_rejects_mixed_primes():
    with pytest.raises(InvalidInputError):
        zeta_pow(3, 1) + zeta_pow(5, 1)
    with pytest.raises(InvalidInputError):
        zeta_pow(3, 1) * zeta_pow(5, 1)


def test_multiplication():
    assert zeta_pow(3, 1) * zeta_pow(3, 2) == CyclotomicNumber.one(3)
    assert zeta_pow(5, 1) * zeta_pow(5, 1) == zeta_pow(5, 2)
    one = CyclotomicNumber.one(3)
    z = zeta_pow(3, 1)
    two_plus_z = CyclotomicNumber.from_rational(3, 2) + z
    assert ((one - z) * two_plus_z) / 3 == one


def test_rational_scalars_and_equality_with_rationals():
    x = CyclotomicNumber.from_rational(7, Fraction(3, 2))
    assert x == Fraction(3, 2)
    assert x.is_rational()
    assert x.rational_value() == Fraction(3, 2)
    assert (2 * zeta_pow(3, 1)).coords == (2, 0)
    assert not zeta_pow(3, 1).is_rational()
    with pytest.raises(ValueError):
        zeta_pow(3, 1).rational_value()


def test_sum_of_all_powers_is_minus_one():
    for p in PRIMES:
        total = CyclotomicNumber.zero(p)
        for v in range(1, p):
            total = total + zeta_pow(p, v)
        assert total == -1


def test_conjugation_examples():
    assert zeta_pow(3, 1).conjugate() == zeta_pow(3, 2)
    x = CyclotomicNumber.from_rational(5, Fraction(7, 3))
    assert x.conjugate() == x


def test_inv_one_minus_zeta_values():
    assert inv_one_minus_zeta(3, 1).coords == (Fraction(-1, 3), Fraction(-2, 3))
    assert inv_one_minus_zeta(3, 2).coords == (Fraction(-2, 3), Fraction(-1, 3))


def test_inv_one_minus_zeta_is_inverse_everywhere():
    for p in PRIMES:
        one = CyclotomicNumber.one(p)
        for u in range(1, p):
            lhs = (one - zeta_pow(p, u)) * inv_one_minus_zeta(p, u)
            assert lhs == one


def test_inv_one_minus_zeta_rejects_zero_exponent():
    with pytest.raises(InvalidInputError):
        inv_one_minus_zeta(5, 0)
    with pytest.raises(InvalidInputError):
        inv_one_minus_zeta(5, 10)


def test_serialization_round_trip():
    x = CyclotomicNumber(5, (Fraction(1, 3), -2, 0, Fraction(7, 2)))
    data = x.to_json_dict()
    assert data["p"] == 5
    assert data["coords"] == ["1/3", "-2/1", "0/1", "7/2"]
    assert CyclotomicNumber.from_json_dict(data) == x


def test_wrong_coordinate_count_rejected():
    with pytest.raises(InvalidInputError):
        CyclotomicNumber(5, (1, 2, 3))


@settings(deadline=None)
@given(st.data())
def test_ring_axioms(data):
    p = data.draw(st.sampled_from(PRIMES))
    x = data.draw(elements(p))
    y = data.draw(elements(p))
    z = data.draw(elements(p))
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * CyclotomicNumber.one(p) == x
    assert x + (-x) == CyclotomicNumber.zero(p)


@settings(deadline=None)
@given(st.data())
def test_conjugation_is_ring_involution(data):
    p = data.draw(st.sampled_from(PRIMES))
    x = data.draw(elements(p))
    y = data.draw(elements(p))
    assert x.conjugate().conjugate() == x
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


@settings(deadline=None)
@given(st.data())
def test_canonical_form_equality_and_hash(data):
    p = data.draw(st.sampled_from((3, 5, 7)))
    x = data.draw(elements(p))
    rebuilt = CyclotomicNumber(p, [Fraction(c) for c in x.coords])
    assert rebuilt == x
    assert hash(rebuilt) == hash(x)
    assert CyclotomicNumber.from_json_dict(x.to_json_dict()) == x
