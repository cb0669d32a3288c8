import math

import numpy as np
import pytest
from sympy.polys.domains import QQ

from arithring import BoundMismatchError, DomainError
from arithring.algebra import (
    GAUSSIAN,
    RATIONAL,
    ArithFunc,
    add,
    dconv,
    e,
    get_field,
    one,
    scale,
    uconv,
    upow,
    zero,
)
from arithring.data import synthetic_arithfunc


def _random_triples(n_triples, bound):
    for _ in range(n_triples):
        yield tuple(
            synthetic_arithfunc(bound, n_terms=np.random.randint(1, 8)) for _ in range(3)
        )


def _check_ring_axioms(f, g, h):
    bound = f.bound
    assert uconv(f, g) == uconv(g, f)
    assert uconv(uconv(f, g), h) == uconv(f, uconv(g, h))
    assert uconv(f, add(g, h)) == add(uconv(f, g), uconv(f, h))
    assert uconv(e(1, bound), f) == f
    assert uconv(zero(bound), f) == zero(bound)


def test_constructors():
    f = synthetic_arithfunc(10)
    assert uconv(e(1, 10), f) == f
    assert zero(10) + f == f
    assert one(6).support == (1, 2, 3, 4, 5, 6)
    assert all(v == 1 for v in one(6).values)
    assert e(6, 10).support == (6,)
    with pytest.raises(DomainError):
        e(11, 10)
    with pytest.raises(DomainError):
        e(0, 10)


def test_add_and_scale():
    assert add(e(2, 10), e(3, 10)).support == (2, 3)
    f = synthetic_arithfunc(10)
    assert scale(0, f) == zero(10)
    assert scale(QQ(3, 4), e(7, 10))[7] == QQ(3, 4)
    assert (f - f).is_zero()
    assert -(-f) == f


def test_from_dict_and_values():
    f = ArithFunc.from_dict({2: 1, 5: "3/2"}, 6)
    assert f.values.tolist() == [0, 1, 0, 0, QQ(3, 2), 0]
    assert ArithFunc.from_values([0, 1, 0, 0, QQ(3, 2), 0]) == f
    assert f.to_dict() == {2: QQ(1), 5: QQ(3, 2)}
    with pytest.raises(DomainError):
        ArithFunc.from_dict({7: 1}, 6)
    with pytest.raises(DomainError):
        f[7]


def test_uconv_examples():
    assert uconv(e(2, 10), e(3, 10)) == e(6, 10)
    assert uconv(e(2, 10), e(4, 10)) == zero(10)
    assert uconv(e(2, 10), e(2, 10)) == zero(10)
    # products above the bound vanish in the truncated ring
    assert uconv(e(3, 10), e(5, 10)) == zero(10)


def test_dconv_examples():
    assert dconv(e(2, 10), e(2, 10)) == e(4, 10)
    assert dconv(e(2, 10), e(3, 10)) == e(6, 10)
    f = synthetic_arithfunc(50)
    assert dconv(e(1, 50), f) == f


def test_upow_examples():
    f = add(e(2, 10), e(3, 10))
    assert upow(f, 2) == scale(2, e(6, 10))
    assert upow(f, 3) == zero(10)
    assert upow(f, 1) == f
    assert upow(f, 0) == e(1, 10)
    g = synthetic_arithfunc(100, unit=True)
    assert upow(g, 5) == uconv(uconv(uconv(uconv(g, g), g), g), g)
    with pytest.raises(DomainError):
        upow(f, -1)


def test_unitary_products_of_indicators():
    bound = 60
    for k1 in range(1, bound + 1):
        for k2 in range(1, bound // k1 + 1):
            expected = e(k1 * k2, bound) if math.gcd(k1, k2) == 1 else zero(bound)
            assert uconv(e(k1, bound), e(k2, bound)) == expected


def test_ring_axioms():
    for f, g, h in _random_triples(20, 200):
        _check_ring_axioms(f, g, h)


@pytest.mark.slow
def test_ring_axioms_full():
    for f, g, h in _random_triples(200, 1000):
        _check_ring_axioms(f, g, h)


def test_bound_mismatch():
    with pytest.raises(BoundMismatchError):
        uconv(e(2, 10), e(3, 11))
    with pytest.raises(BoundMismatchError):
        add(e(2, 10), e(2, 10, "gaussian"))


def test_gaussian_coefficients():
    i = GAUSSIAN.convert((0, 1))
    f = scale(i, e(2, 30, GAUSSIAN))
    g = scale(i, e(3, 30, GAUSSIAN))
    assert uconv(f, g) == scale(-1, e(6, 30, GAUSSIAN))
    assert GAUSSIAN.format(GAUSSIAN.parse("1/2-3/4i")) == "1/2-3/4i"
    assert GAUSSIAN.format(GAUSSIAN.convert(2)) == "2/1+0/1i"
    assert RATIONAL.format(RATIONAL.parse("-6/4")) == "-3/2"
    assert RATIONAL.parse("5") == QQ(5)


def test_get_field():
    assert get_field("rational") is RATIONAL
    assert get_field(GAUSSIAN) is GAUSSIAN
    with pytest.raises(DomainError):
        get_field("real")
    with pytest.raises(DomainError):
        RATIONAL.convert(0.5)


def test_shared_docstrings_render():
    assert "{index: coefficient}" in ArithFunc.from_dict.__doc__
    assert "{doc_bound}" not in e.__doc__
