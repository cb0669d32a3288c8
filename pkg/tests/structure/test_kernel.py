import pytest

from arithring import DomainError
from arithring.algebra import e, uconv, zero
from arithring.data import prime_power_indicator
from arithring.structure import regularity_kernel


def test_kernel_examples():
    assert regularity_kernel(e(2, 10), 2) == [e(2, 10)]
    kernel = regularity_kernel(e(6, 60), 6)
    assert sorted(g.support for g in kernel) == [(2,), (3,), (4,), (6,)]


def test_kernel_of_zero_is_everything():
    kernel = regularity_kernel(zero(20), 5)
    assert kernel == [e(k, 20) for k in range(1, 6)]


def test_kernel_sees_truncation():
    # 2m > 10 for m = 7, 9 so those e_m are annihilated too
    kernel = regularity_kernel(e(2, 10), 10)
    assert len(kernel) == 7


def test_kernel_vectors_are_annihilated():
    f = e(6, 200) + e(10, 200) - e(15, 200)
    kernel = regularity_kernel(f, 12)
    assert kernel
    for g in kernel:
        assert max(g.support) <= 12
        assert g[min(g.support)] == 1
        assert uconv(f, g).is_zero()


def test_prime_power_indicator_is_regular():
    assert regularity_kernel(prime_power_indicator(1000), 10) == []
    coefficients = {q: k + 1 for k, q in enumerate([2, 3, 4, 5, 7, 8, 9, 11, 13])}
    assert regularity_kernel(prime_power_indicator(1000, coefficients), 8) == []


def test_kernel_range():
    with pytest.raises(DomainError):
        regularity_kernel(e(2, 10), 0)
    with pytest.raises(DomainError):
        regularity_kernel(e(2, 10), 11)


@pytest.mark.slow
def test_prime_power_indicator_is_regular_full():
    bound = 10 ** 4
    f = prime_power_indicator(bound)
    for max_index in range(1, 13):
        assert regularity_kernel(f, max_index) == []
    assert e(2, bound) in regularity_kernel(e(2, bound), 10)


@pytest.mark.slow
def test_generic_prime_power_function_is_regular():
    coefficients = prime_power_indicator(100, "random").to_dict()
    assert len(set(coefficients.values())) == len(coefficients)
    f = prime_power_indicator(10 ** 4, coefficients)
    assert regularity_kernel(f, 8) == []
