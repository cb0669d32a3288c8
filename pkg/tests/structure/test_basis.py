import pytest

from arithring import BoundMismatchError, DomainError
from arithring.algebra import RATIONAL, add, e, scale, sum_functions
from arithring.data import synthetic_arithfunc
from arithring.structure import (
    BasisFamily,
    ResidueNonzero,
    echelon_basis,
    express_in_basis,
)


def test_echelon_basis_examples():
    family = echelon_basis([scale(5, e(4, 10))])
    assert family.orders == (4,)
    assert family[4] == e(4, 10)

    family = echelon_basis([add(e(2, 10), e(3, 10)), add(e(3, 10), e(5, 10))])
    assert family.orders == (2, 3)
    assert family[2] == e(2, 10) - e(5, 10)
    assert family[3] == add(e(3, 10), e(5, 10))


def test_echelon_basis_drops_dependent_generators():
    f = add(e(2, 20), e(7, 20))
    g = scale(3, e(7, 20))
    family = echelon_basis([f, g, add(f, g)])
    assert len(family) == 2
    assert family.orders == (2, 7)


def test_empty_family():
    with pytest.raises(DomainError):
        echelon_basis([])
    family = echelon_basis([], bound=10)
    assert len(family) == 0
    assert isinstance(express_in_basis(e(3, 10), family), ResidueNonzero)
    assert express_in_basis(e(3, 10) - e(3, 10), family) == []


def test_basis_family_validation():
    with pytest.raises(DomainError):
        BasisFamily({3: e(2, 10)}, 10, RATIONAL)
    with pytest.raises(DomainError):
        BasisFamily({2: scale(2, e(2, 10))}, 10, RATIONAL)
    with pytest.raises(DomainError):
        BasisFamily({2: e(2, 20)}, 10, RATIONAL)


def test_express_in_span():
    family = echelon_basis([add(e(2, 10), e(3, 10)), add(e(3, 10), e(5, 10))])
    f = sum_functions([e(2, 10), scale(2, e(3, 10)), e(5, 10)], 10)
    assert express_in_basis(f, family) == [(2, 1), (3, 2)]


def test_express_outside_span():
    family = echelon_basis([add(e(2, 10), e(3, 10))])
    result = express_in_basis(e(5, 10), family)
    assert isinstance(result, ResidueNonzero)
    assert result.residue == e(5, 10)
    assert result.terms == []

    result = express_in_basis(add(e(2, 10), e(7, 10)), family)
    assert isinstance(result, ResidueNonzero)
    assert result.terms == [(2, 1)]
    assert result.residue == e(7, 10) - e(3, 10)


def test_standard_basis_coefficients_are_values():
    family = BasisFamily.standard(300)
    for _ in range(10):
        f = synthetic_arithfunc(300, n_terms=20)
        assert express_in_basis(f, family) == list(f.items())


def _check_ten_generator_families(bound, n_families):
    for _ in range(n_families):
        generators = [synthetic_arithfunc(bound, n_terms=6) for _ in range(10)]
        family = echelon_basis(generators)
        orders = list(family.orders)
        assert all(a < b for a, b in zip(orders, orders[1:]))
        for k in orders:
            assert min(family[k].support) == k
            assert family[k][k] == 1
        for g in generators:
            terms = express_in_basis(g, family)
            assert not isinstance(terms, ResidueNonzero)
            assert [k for k, _ in terms] == sorted(k for k, _ in terms)
            rebuilt = sum_functions((scale(a, family[k]) for k, a in terms), bound)
            assert rebuilt == g


def test_expansion_reconstructs():
    _check_ten_generator_families(400, 10)


@pytest.mark.slow
def test_expansion_reconstructs_full():
    _check_ten_generator_families(2000, 50)


def test_express_mismatch():
    with pytest.raises(BoundMismatchError):
        express_in_basis(e(2, 10), BasisFamily.standard(20))
