from typing import Callable, Container, Union

from arithring.algebra import ArithFunc
from arithring.algebra._arithfunc import _empty
from arithring.numtheory import get_sieve

ExponentSet = Union[Container[int], Callable[[int], bool]]


def retract_sqf(f: ArithFunc) -> ArithFunc:
    """
    Square-free retract: keep the values of `f` at square-free indices.

    A ring epimorphism onto the functions supported on square-free integers,
    splitting their inclusion.
    """
    mask = get_sieve().squarefree_mask(f.bound)
    values = _empty(f.bound, f.field)
    for k, c in f.items():
        if mask[k]:
            values[k] = c
    return ArithFunc(values, f.field)


def retract_Q(f: ArithFunc, Q: ExponentSet) -> ArithFunc:
    """
    Keep the values of `f` at ``n = p_1^a_1 ... p_r^a_r`` with every ``a_i`` in `Q`.

    Parameters
    ----------
    f
        Function to project.
    Q
        Allowed exponents, either a container (``{1}`` gives
        :func:`retract_sqf`) or a predicate such as ``lambda a: a % 2 == 1``
        for the exponentially odd integers. Index 1 is always kept.
    """
    allowed = Q if callable(Q) else Q.__contains__
    sieve = get_sieve()
    values = _empty(f.bound, f.field)
    for k, c in f.items():
        if all(allowed(a) for _, a in sieve.factor_pairs(k)):
            values[k] = c
    return ArithFunc(values, f.field)
