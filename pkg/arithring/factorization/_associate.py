import logging
import math

from arithring.algebra import ArithFunc, check_compatible
from arithring.algebra._arithfunc import support_below
from arithring.algebra._linalg import rref

logger = logging.getLogger(__name__)


def _has_unit_multiplier(a: ArithFunc, b: ArithFunc) -> bool:
    """Whether ``u ⊕ a = b`` for some ``u`` with ``u(1) != 0``."""
    field = a.field
    if a.is_zero():
        return b.is_zero()
    bound = a.bound
    support = a.support
    # unknown u(m) occurs only when m * d <= N for some d in supp(a)
    unknowns = list(range(1, bound // support[0] + 1))
    position = {m: c for c, m in enumerate(unknowns)}
    equations = {}
    for m in unknowns:
        for d in support_below(support, bound // m):
            if math.gcd(d, m) != 1:
                continue
            row = equations.setdefault(d * m, {})
            row[m] = row.get(m, field.zero) + a._values[d]
    for n in b.support:
        if n not in equations:
            return False
    ncols = len(unknowns) + 1
    rows = []
    for n, row in sorted(equations.items()):
        dense = [field.zero] * ncols
        for m, c in row.items():
            dense[position[m]] = c
        dense[-1] = b._values[n]
        rows.append(dense)
    reduced, pivots = rref(rows, ncols, field)
    if pivots and pivots[-1] == ncols - 1:
        return False
    if 0 not in pivots:
        return True
    # u(1) = rhs - sum over free columns, nonzero for some choice unless all vanish
    row = reduced[pivots.index(0)]
    return any(not field.is_zero(c) for c in row[1:])


def is_associate(f: ArithFunc, g: ArithFunc) -> bool:
    """
    Whether ``g = u ⊕ f`` and ``f = v ⊕ g`` for units ``u`` and ``v``.

    Both conditions are decided by exact linear algebra on the unknown values
    of ``u`` (respectively ``v``) at every index up to N.

    Examples
    --------
    >>> is_associate(e(2, 20), scale(3, e(2, 20)))
    True
    >>> is_associate(e(2, 20), e(3, 20))
    False
    """
    check_compatible(f, g)
    return _has_unit_multiplier(f, g) and _has_unit_multiplier(g, f)
