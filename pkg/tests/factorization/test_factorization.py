import numpy as np
import pytest

from arithring import BoundMismatchError, DomainError
from arithring.algebra import add, e, inverse, scale, uconv, zero
from arithring.data import synthetic_arithfunc
from arithring.factorization import (
    atom_search,
    factorization_length_bound,
    is_associate,
    verify_factorization,
)


def _has_factors(certificates, *factors):
    return any(c.factors == factors for c in certificates)


def test_verify_factorization():
    certificate = verify_factorization(e(30, 100), [e(2, 100), e(3, 100), e(5, 100)])
    assert certificate.verified
    assert certificate.product() == e(30, 100)
    wrong = verify_factorization(e(30, 100), [e(2, 100), e(15, 100), e(3, 100)])
    assert not wrong.verified
    assert verify_factorization(e(1, 100), []).verified
    assert not verify_factorization(e(2, 100), []).verified
    with pytest.raises(BoundMismatchError):
        verify_factorization(e(30, 100), [e(2, 50)])


def test_verify_two_factor_examples():
    factors = [e(2, 100), add(e(16, 100), e(3, 100))]
    assert verify_factorization(e(6, 100), factors).verified
    factors = [add(e(6, 100), e(20, 100)), add(e(2, 100), e(5, 100))]
    assert verify_factorization(e(30, 100), factors).verified


def _check_power_of_two_family(bound):
    k = 1
    while 2 ** k <= bound:
        factors = [e(2, bound), add(e(2 ** k, bound), e(3, bound))]
        assert verify_factorization(e(6, bound), factors).verified
        k += 1


def test_power_of_two_family():
    _check_power_of_two_family(1000)


@pytest.mark.slow
def test_power_of_two_family_full():
    _check_power_of_two_family(10 ** 5)


def test_factorization_length_bound():
    assert factorization_length_bound(e(30, 100)) == 3
    assert factorization_length_bound(add(e(2, 100), e(30, 100))) == 1
    with pytest.raises(DomainError):
        factorization_length_bound(zero(100))
    with pytest.raises(DomainError):
        factorization_length_bound(add(e(1, 100), e(2, 100)))


def test_is_associate_examples():
    assert is_associate(e(2, 60), scale(3, e(2, 60)))
    assert not is_associate(e(2, 60), e(3, 60))
    assert is_associate(e(2, 60), add(e(2, 60), e(6, 60)))
    assert not is_associate(e(2, 60), add(e(2, 60), e(3, 60)))
    assert not is_associate(e(2, 60), zero(60))
    assert is_associate(zero(60), zero(60))
    # e_3 ⊕ e_20 = e_60 is the only visible product
    assert is_associate(e(20, 60), add(e(20, 60), e(60, 60)))
    with pytest.raises(BoundMismatchError):
        is_associate(e(2, 60), e(2, 30))


def test_unit_multiples_are_associates():
    for _ in range(10):
        f = synthetic_arithfunc(60, n_terms=4, unit=False)
        u = synthetic_arithfunc(60, n_terms=4, unit=True)
        assert is_associate(f, uconv(u, f))
        assert is_associate(uconv(u, f), f)
        assert is_associate(e(1, 60), u)
        assert is_associate(inverse(u), e(1, 60))


def test_atom_search_square_free_target():
    certificates = atom_search(e(6, 400), 20, {1}, progress_bar=False)
    assert certificates
    assert all(c.verified for c in certificates)
    assert _has_factors(certificates, e(2, 400), e(3, 400))
    assert _has_factors(certificates, e(2, 400), add(e(3, 400), e(16, 400)))


def test_atom_search_with_signed_coefficients():
    certificates = atom_search(e(30, 400), 20, [1, -1, 2], progress_bar=False)
    assert all(c.verified for c in certificates)
    assert all(c.factors[0][min(c.factors[0].support)] == 1 for c in certificates)
    assert _has_factors(
        certificates, add(e(2, 400), e(5, 400)), add(e(6, 400), e(20, 400))
    )
    assert _has_factors(certificates, e(2, 400), e(15, 400))
    keys = [(c.factors[0].sort_key(), c.factors[1].sort_key()) for c in certificates]
    assert len(set(keys)) == len(keys)


def test_atom_search_nothing_found():
    assert atom_search(e(4, 400), 10, [1], progress_bar=False) == []
    with pytest.raises(DomainError):
        atom_search(zero(400), 10, [1], progress_bar=False)


@pytest.mark.slow
def test_atom_search_wide():
    target = add(e(30, 1000), scale(2, e(42, 1000)))
    certificates = atom_search(target, 50, [1, -1, 2, -2], max_support=2)
    assert all(c.verified for c in certificates)
    second = add(e(15, 1000), scale(2, e(21, 1000)))
    assert _has_factors(certificates, e(2, 1000), second)


def test_factorizations_respect_length_bound():
    bound = 400
    assert len([e(2, bound), e(3, bound), e(5, bound)]) <= factorization_length_bound(
        e(30, bound)
    )
    certificates = atom_search(e(30, bound), 20, [1, -1, 2], progress_bar=False)
    for c in certificates:
        assert len(c.factors) <= factorization_length_bound(c.target)
    checked = 0
    for _ in range(30):
        n_factors = np.random.randint(2, 5)
        factors = [
            synthetic_arithfunc(bound, indices=np.random.randint(2, 12, size=2), unit=False)
            for _ in range(n_factors)
        ]
        product = factors[0]
        for g in factors[1:]:
            product = uconv(product, g)
        if product.is_zero():
            continue
        checked += 1
        assert verify_factorization(product, factors).verified
        assert n_factors <= factorization_length_bound(product)
    assert checked > 0


def test_is_associate_symmetric_and_transitive():
    bound = 60
    for _ in range(15):
        f = synthetic_arithfunc(bound, n_terms=4, unit=False)
        u = synthetic_arithfunc(bound, n_terms=3, unit=True)
        v = synthetic_arithfunc(bound, n_terms=3, unit=True)
        g = uconv(u, f)
        h = uconv(v, g)
        for a, b in [(f, g), (g, h), (f, h)]:
            assert is_associate(a, b)
            assert is_associate(b, a)
        other = synthetic_arithfunc(bound, n_terms=4, unit=False)
        assert is_associate(f, other) == is_associate(other, f)
        if is_associate(f, other):
            assert is_associate(h, other)
