import logging
import math
from typing import List

from arithring._exceptions import DomainError
from arithring.algebra import ArithFunc
from arithring.algebra._arithfunc import support_below
from arithring.algebra._linalg import nullspace

logger = logging.getLogger(__name__)


def regularity_kernel(f: ArithFunc, M: int) -> List[ArithFunc]:
    """
    Exact kernel of ``g -> f ⊕ g`` on functions supported in ``1..M``.

    The unknowns are ``g(1), ..., g(M)``; one linear constraint is read at every
    ``n <= N``. An empty result means that no nonzero ``g`` with support in
    ``1..M`` is annihilated by `f` in A_N, which is evidence of regularity at
    this resolution and nothing more.

    Parameters
    ----------
    f
        Function whose annihilator is searched.
    M
        Largest index allowed in the support of the unknown ``g``; at most N.

    Returns
    -------
    A basis of the kernel in reduced echelon form, each vector with leading
    coefficient 1.

    Examples
    --------
    >>> regularity_kernel(e(2, 10), 2) == [e(2, 10)]
    True
    """
    bound = f.bound
    if not 1 <= M <= bound:
        raise DomainError("M must lie in 1..{}, got {}".format(bound, M))
    field = f.field
    constraints = {}
    support = f.support
    for m in range(1, M + 1):
        for d in support_below(support, bound // m):
            if math.gcd(d, m) != 1:
                continue
            row = constraints.setdefault(d * m, {})
            row[m] = row.get(m, field.zero) + f._values[d]
    rows = set()
    for row in constraints.values():
        dense = tuple(row.get(m, field.zero) for m in range(1, M + 1))
        if any(not field.is_zero(c) for c in dense):
            rows.add(dense)
    # sort for a reproducible elimination order
    rows = sorted(rows, key=lambda r: [field.format(c) for c in r])
    basis = nullspace(rows, M, field)
    logger.info(
        "Regularity kernel: {} distinct constraints, {} unknowns, nullity {}".format(
            len(rows), M, len(basis)
        )
    )
    return [
        ArithFunc.from_dict(
            {m: c for m, c in enumerate(vector, start=1) if not field.is_zero(c)},
            bound,
            field,
        )
        for vector in basis
    ]
