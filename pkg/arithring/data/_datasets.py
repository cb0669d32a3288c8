from typing import Mapping, Optional, Sequence, Union

import numpy as np
from sympy.polys.domains import QQ

from arithring._docs import _doc_params, doc_bound, doc_field
from arithring._exceptions import DomainError
from arithring.algebra import ArithFunc, get_field
from arithring.algebra._arithfunc import FieldLike
from arithring.numtheory import get_sieve, prime_powers

from ._synthetic import _generate_arithfunc, _generate_class_function, _pick_indices


@_doc_params(doc_bound=doc_bound, doc_field=doc_field)
def synthetic_arithfunc(
    bound: int,
    n_terms: Optional[int] = None,
    indices: Optional[Sequence[int]] = None,
    unit: Optional[bool] = None,
    field: FieldLike = None,
    max_numerator: int = 9,
    max_denominator: int = 5,
) -> ArithFunc:
    """\
    Random function with nonzero rational coefficients on a few indices.

    This generator is for testing and exploration. Values are drawn with
    ``numpy.random``, seeded through ``arithring.settings.seed``.

    Parameters
    ----------
    {doc_bound}
    n_terms
        Support size when `indices` is not given (default ``min(bound, 10)``).
    indices
        Explicit support.
    unit
        True forces ``f(1) != 0``, False forces ``f(1) = 0``; None leaves it to chance.
    {doc_field}
    max_numerator
        Largest absolute numerator of a coefficient.
    max_denominator
        Largest denominator of a coefficient.

    Examples
    --------
    >>> import arithring
    >>> f = arithring.data.synthetic_arithfunc(100, n_terms=5, unit=False)
    """
    field = get_field(field)
    if bound < 1:
        raise DomainError("the bound must be a positive integer, got {}".format(bound))
    if indices is None:
        if n_terms is None:
            n_terms = min(bound, 10)
        pool = np.arange(2 if unit is False else 1, bound + 1)
        if len(pool) == 0:
            raise DomainError("no index available at bound {}".format(bound))
        indices = _pick_indices(pool, n_terms).tolist()
    indices = set(int(k) for k in indices)
    if unit:
        indices.add(1)
    elif unit is False:
        indices.discard(1)
    return _generate_arithfunc(
        bound, sorted(indices), field, max_numerator, max_denominator
    )


def synthetic_class_function(
    bound: int,
    classes: Sequence[int],
    n_terms: int = 5,
    max_index: Optional[int] = None,
    field: FieldLike = None,
    max_numerator: int = 9,
    max_denominator: int = 5,
) -> ArithFunc:
    """
    Random non-unit supported in the leading-prime classes `classes` only.

    At least one index of the largest requested class is used whenever one
    exists below the limit, so the filtration degree is ``max(classes)``.

    Parameters
    ----------
    bound
        Truncation bound N.
    classes
        Class indices ``i``; the support lies in the union of the ``A^i``.
    n_terms
        Support size.
    max_index
        Largest index allowed in the support (defaults to `bound`).
    field
        Coefficient field.
    max_numerator
        Largest absolute numerator of a coefficient.
    max_denominator
        Largest denominator of a coefficient.
    """
    if not classes or min(classes) < 1:
        raise DomainError("classes must be positive class indices, got {}".format(classes))
    return _generate_class_function(
        bound,
        classes,
        n_terms,
        max_index,
        get_field(field),
        max_numerator,
        max_denominator,
    )


def prime_power_indicator(
    bound: int,
    coefficients: Union[None, str, Mapping[int, object]] = None,
    field: FieldLike = None,
) -> ArithFunc:
    """
    Function supported on the prime powers ``<= bound``.

    Parameters
    ----------
    bound
        Truncation bound N.
    coefficients
        None for the indicator itself, ``"random"`` for distinct random nonzero
        rationals, or a mapping ``{q: c}`` over prime powers ``q``.
    field
        Coefficient field.
    """
    field = get_field(field)
    powers = [int(q) for q in prime_powers(bound)]
    if coefficients is None:
        values = {q: field.one for q in powers}
    elif coefficients == "random":
        numerators = np.random.choice(
            np.arange(1, 10 * len(powers) + 1), size=len(powers), replace=False
        )
        signs = np.random.choice([-1, 1], size=len(powers))
        values = {q: QQ(int(s * p), 1) for q, s, p in zip(powers, signs, numerators)}
    else:
        values = dict(coefficients)
        allowed = set(powers)
        stray = [q for q in values if int(q) not in allowed]
        if stray:
            raise DomainError("{} are not prime powers <= {}".format(stray, bound))
    return ArithFunc.from_dict(values, bound, field)


def prime_indicator(bound: int, field: FieldLike = None) -> ArithFunc:
    """Indicator of the primes ``<= bound``."""
    field = get_field(field)
    sieve = get_sieve()
    sieve.check(bound)
    primes = sieve.primes
    return ArithFunc.from_dict(
        {int(p): field.one for p in primes[primes <= bound]}, bound, field
    )
