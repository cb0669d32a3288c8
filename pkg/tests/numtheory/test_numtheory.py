import pytest
from hypothesis import given
from hypothesis import strategies as st

import arithring
from arithring import ZERO, DomainError
from arithring.numtheory import (
    Factorization,
    class_index,
    decode_subset,
    encode_subset,
    factor,
    is_prime,
    is_prime_power,
    is_squarefree,
    leading_prime,
    omega,
    phi_decode,
    phi_encode,
    prime,
    prime_index,
    prime_powers,
    prime_support,
    primorial,
    subset_product,
    unitary_divisors,
    unitary_product,
)

positive = st.integers(min_value=1, max_value=5000)
index_sets = st.lists(st.integers(min_value=1, max_value=6), max_size=4)


def test_factor():
    assert factor(1).pairs == ()
    assert factor(12).pairs == ((2, 2), (3, 1))
    assert factor(30).pairs == ((2, 1), (3, 1), (5, 1))
    assert factor(97).pairs == ((97, 1),)
    with pytest.raises(DomainError):
        factor(0)


def test_factor_above_sieve_bound():
    previous = arithring.settings.sieve_bound
    try:
        arithring.settings.sieve_bound = 100
        assert factor(100).value == 100
        with pytest.raises(DomainError):
            factor(101)
    finally:
        arithring.settings.sieve_bound = previous


def test_unitary_product():
    assert unitary_product(2, 3) == 6
    assert unitary_product(2, 4) is ZERO
    assert unitary_product(1, 35) == 35
    assert str(ZERO) == "zero"


def test_unitary_divisors():
    assert unitary_divisors(1) == [1]
    assert unitary_divisors(12) == [1, 3, 4, 12]
    assert unitary_divisors(30) == [1, 2, 3, 5, 6, 10, 15, 30]


def test_omega_and_leading_prime():
    assert omega(1) == 0
    assert omega(12) == 2
    assert omega(30) == 3
    assert omega(2 ** 10) == 1
    assert leading_prime(12) == 2
    assert leading_prime(35) == 5
    assert leading_prime(97) == 97
    with pytest.raises(DomainError):
        leading_prime(1)


def test_class_index():
    assert class_index(6) == 1
    assert class_index(35) == 3
    assert class_index(3) == 2
    with pytest.raises(DomainError):
        class_index(1)


def test_phi_codec():
    assert phi_encode(Factorization()) == 1
    assert phi_decode(1) == Factorization()
    assert phi_encode(Factorization(((2, 2),))) == 4
    assert phi_decode(18) == Factorization(((2, 1), (3, 2)))
    assert Factorization.from_columns([(1, 2)]).value == 4
    assert Factorization(((2, 1), (3, 2))).columns() == ((1, 1), (2, 2))
    assert str(factor(360)) == "2^3 * 3^2 * 5"


def test_factorization_validation():
    with pytest.raises(DomainError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(DomainError):
        Factorization(((4, 1),))
    with pytest.raises(DomainError):
        Factorization(((2, 0),))


def test_join():
    a = Factorization(((2, 1),))
    b = Factorization(((3, 2),))
    assert a.join(b) == Factorization(((2, 1), (3, 2)))
    assert a.join(Factorization(((2, 3),))) is ZERO


def test_supplemented_primitives():
    assert prime(1) == 2
    assert prime(3) == 5
    assert prime_index(97) == 25
    assert primorial(0) == 1
    assert primorial(3) == 30
    assert primorial(5) == 2310
    assert prime_support(360) == (2, 3, 5)
    assert is_prime(97) and not is_prime(1) and not is_prime(91)
    assert is_squarefree(30) and not is_squarefree(12) and is_squarefree(1)
    assert is_prime_power(8) and not is_prime_power(1) and not is_prime_power(6)
    assert prime_powers(10).tolist() == [2, 3, 4, 5, 7, 8, 9]
    with pytest.raises(DomainError):
        prime_index(91)


def test_subset_monoid():
    assert encode_subset({1, 3}) == 10
    assert encode_subset(set()) == 1
    assert decode_subset(30) == frozenset({1, 2, 3})
    assert subset_product({1}, {2, 3}) == frozenset({1, 2, 3})
    assert subset_product({1, 2}, {2}) is ZERO
    with pytest.raises(DomainError):
        decode_subset(12)


@given(positive)
def test_unitary_divisor_count_and_involution(n):
    divisors = unitary_divisors(n)
    assert len(divisors) == 2 ** omega(n)
    assert divisors[0] == 1 and divisors[-1] == n
    assert sorted(n // d for d in divisors) == divisors


@given(positive)
def test_phi_round_trip(n):
    assert phi_encode(phi_decode(n)) == n
    m = phi_decode(n)
    assert phi_decode(phi_encode(m)) == m


@given(positive, positive)
def test_join_matches_unitary_product(k, m):
    joined = factor(k).join(factor(m))
    product = unitary_product(k, m)
    if product is ZERO:
        assert joined is ZERO
        assert set(prime_support(k)) & set(prime_support(m))
    else:
        assert phi_encode(joined) == product


@given(st.integers(min_value=2, max_value=5000))
def test_classes_partition(n):
    i = class_index(n)
    assert prime(i) == leading_prime(n)
    assert all(n % prime(j) != 0 for j in range(1, i))


@given(index_sets, index_sets)
def test_subset_encoding_is_monoid_isomorphism(a, b):
    product = subset_product(a, b)
    encoded = unitary_product(encode_subset(a), encode_subset(b))
    if product is ZERO:
        assert encoded is ZERO
    else:
        assert encode_subset(product) == encoded
