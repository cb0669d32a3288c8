import pytest
from sympy.polys.domains import QQ

import arithring
from arithring import DomainError
from arithring.algebra import GAUSSIAN
from arithring.data import (
    prime_indicator,
    prime_power_indicator,
    synthetic_arithfunc,
    synthetic_class_function,
)
from arithring.numtheory import class_index
from arithring.structure import filtration_degree


def test_synthetic_arithfunc():
    f = synthetic_arithfunc(100, n_terms=5)
    assert len(f.support) == 5
    assert 1 in synthetic_arithfunc(100, n_terms=3, unit=True).support
    assert 1 not in synthetic_arithfunc(100, n_terms=30, unit=False).support
    assert synthetic_arithfunc(100, indices=[3, 7]).support == (3, 7)
    assert synthetic_arithfunc(100, indices=[3, 7], unit=True).support == (1, 3, 7)
    assert len(synthetic_arithfunc(4, n_terms=10).support) == 4
    f = synthetic_arithfunc(1000, n_terms=50, max_numerator=3, max_denominator=2)
    for _, c in f.items():
        assert 1 <= abs(QQ.numer(c)) <= 3
        assert QQ.denom(c) <= 2
    with pytest.raises(DomainError):
        synthetic_arithfunc(0)


def test_synthetic_arithfunc_seeded():
    arithring.settings.seed = 3
    f = synthetic_arithfunc(500, n_terms=20)
    arithring.settings.seed = 3
    assert synthetic_arithfunc(500, n_terms=20) == f


def test_synthetic_gaussian():
    f = synthetic_arithfunc(100, n_terms=20, field="gaussian")
    assert f.field == GAUSSIAN
    assert len(f.support) == 20


def test_synthetic_class_function():
    for _ in range(10):
        f = synthetic_class_function(2000, [2, 3], n_terms=6)
        assert {class_index(n) for n in f.support} <= {2, 3}
        assert 3 in {class_index(n) for n in f.support}
        assert filtration_degree(f) == 3
    f = synthetic_class_function(2000, [1, 4], n_terms=8, max_index=100)
    assert max(f.support) <= 100
    with pytest.raises(DomainError):
        synthetic_class_function(100, [])
    with pytest.raises(DomainError):
        synthetic_class_function(100, [0, 1])
    with pytest.raises(DomainError):
        synthetic_class_function(100, [5], max_index=10)


def test_prime_power_indicator():
    f = prime_power_indicator(30)
    assert f.support == (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29)
    assert all(c == 1 for _, c in f.items())
    g = prime_power_indicator(30, "random")
    assert g.support == f.support
    assert len({c for _, c in g.items()}) == len(f.support)
    h = prime_power_indicator(30, {4: 2, 9: -1})
    assert h.to_dict() == {4: 2, 9: -1}
    with pytest.raises(DomainError):
        prime_power_indicator(30, {6: 1})


def test_prime_indicator():
    assert prime_indicator(30).support == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert prime_indicator(1).is_zero()


def test_indicators_above_sieve_bound():
    previous = arithring.settings.sieve_bound
    try:
        arithring.settings.sieve_bound = 100
        assert prime_indicator(100).support[-1] == 97
        with pytest.raises(DomainError):
            prime_indicator(200)
        with pytest.raises(DomainError):
            prime_power_indicator(200)
    finally:
        arithring.settings.sieve_bound = previous
