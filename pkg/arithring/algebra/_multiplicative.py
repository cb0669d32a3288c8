from typing import Mapping, Tuple

from arithring.numtheory import get_sieve

from ._arithfunc import ArithFunc, FieldLike, _empty
from ._field import get_field


def multiplicative_from(
    table: Mapping[Tuple[int, int], object], bound: int, field: FieldLike = None
) -> ArithFunc:
    """
    Expand the product ``prod_i (1 + sum_j c_(i,j) y_i^(j))`` into a function.

    Parameters
    ----------
    table
        ``{(i, j): c}`` giving the value ``c`` at the prime power ``p_i ** j``;
        missing entries are zero.
    bound
        Truncation bound N.
    field
        Coefficient field, defaults to ``arithring.settings.field``.

    Returns
    -------
    The multiplicative function with ``f(1) = 1`` and
    ``f(p_i1^j1 ... p_ir^jr) = c_(i1,j1) ... c_(ir,jr)``.

    Examples
    --------
    >>> multiplicative_from({}, 10) == e(1, 10)
    True
    """
    field = get_field(field)
    sieve = get_sieve()
    coefficients = {(int(i), int(j)): field.convert(c) for (i, j), c in table.items()}
    values = _empty(bound, field)
    values[1] = field.one
    for n in range(2, bound + 1):
        value = field.one
        for p, a in sieve.factor_pairs(n):
            c = coefficients.get((sieve.prime_index(p), a))
            if c is None or field.is_zero(c):
                value = field.zero
                break
            value = value * c
        values[n] = value
    return ArithFunc(values, field)


def is_multiplicative(f: ArithFunc) -> bool:
    """
    Whether ``f(1) = 1`` and ``f(nm) = f(n) f(m)`` for all coprime ``n, m``
    with ``nm <= N``.

    It is enough to compare every ``f(n)`` with the product of `f` over the
    maximal prime powers of ``n``.
    """
    field = f.field
    fv = f._values
    if fv[1] != field.one:
        return False
    sieve = get_sieve()
    for n in range(2, f.bound + 1):
        pairs = sieve.factor_pairs(n)
        if len(pairs) < 2:
            continue
        value = field.one
        for p, a in pairs:
            value = value * fv[p ** a]
        if value != fv[n]:
            return False
    return True
