import logging

from arithring._exceptions import DomainError
from arithring.numtheory import get_sieve, unitary_divisor_table

from ._arithfunc import ArithFunc, FieldLike, _empty, add, e, scale
from ._convolution import uconv
from ._field import get_field

logger = logging.getLogger(__name__)


def is_unit(f: ArithFunc) -> bool:
    """``f`` is invertible in A_N iff ``f(1) != 0``."""
    return not f.field.is_zero(f._values[1])


def inverse(f: ArithFunc) -> ArithFunc:
    """
    Unitary-convolution inverse of a unit, by recursion over the index.

    ``g(1) = 1 / f(1)`` and, for ``n >= 2``,
    ``g(n) = -(1 / f(1)) * sum over d || n, d > 1 of f(d) g(n / d)``.

    Parameters
    ----------
    f
        A unit, i.e. ``f(1) != 0``.

    Returns
    -------
    The function ``g`` with ``uconv(f, g) == e(1)`` at the bound of `f`.

    Examples
    --------
    >>> inverse(one(30)) == mobius_star(30)
    True
    """
    if not is_unit(f):
        raise DomainError("only functions with f(1) != 0 are invertible")
    field = f.field
    bound = f.bound
    table = unitary_divisor_table(bound)
    fv = f._values
    zero = field.zero
    inv_f1 = field.one / fv[1]
    g = _empty(bound, field)
    g[1] = inv_f1
    for n in range(2, bound + 1):
        acc = zero
        for d in table[n][1:]:
            c = fv[d]
            if c != zero:
                acc += c * g[n // d]
        g[n] = -inv_f1 * acc
    return ArithFunc(g, field)


def geometric_inverse(f: ArithFunc) -> ArithFunc:
    """
    Inverse of a unit through the geometric series ``sum_i (e_1 - f / f(1))^i``.

    The powers of the non-unit ``e_1 - f / f(1)`` have strictly increasing
    order, so the series is a finite sum in A_N. Kept as an independent check
    of :func:`inverse`.
    """
    if not is_unit(f):
        raise DomainError("only functions with f(1) != 0 are invertible")
    field = f.field
    inv_f1 = field.one / f._values[1]
    identity = e(1, f.bound, field)
    step = identity - scale(inv_f1, f)
    total = identity
    power = identity
    n_terms = 1
    while True:
        power = uconv(power, step)
        if power.is_zero():
            break
        total = add(total, power)
        n_terms += 1
    logger.debug("Geometric series closed after {} terms".format(n_terms))
    return scale(inv_f1, total)


def mobius_star(bound: int, field: FieldLike = None) -> ArithFunc:
    """
    Unitary Möbius function ``mu*(r) = (-1) ** omega(r)``, the inverse of :func:`one`.
    """
    field = get_field(field)
    omega = get_sieve().omega_array(bound)
    values = _empty(bound, field)
    for r in range(1, bound + 1):
        values[r] = field.one if omega[r] % 2 == 0 else -field.one
    return ArithFunc(values, field)
