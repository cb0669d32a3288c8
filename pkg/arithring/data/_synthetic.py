import logging
from typing import Optional, Sequence

import numpy as np
from sympy.polys.domains import QQ

from arithring._exceptions import DomainError
from arithring.algebra import ArithFunc
from arithring.numtheory import get_sieve

logger = logging.getLogger(__name__)


def _random_coefficients(n: int, max_numerator: int, max_denominator: int):
    numerators = np.random.randint(1, max_numerator + 1, size=n)
    signs = np.random.choice([-1, 1], size=n)
    denominators = np.random.randint(1, max_denominator + 1, size=n)
    return [QQ(int(s * p), int(q)) for s, p, q in zip(signs, numerators, denominators)]


def _generate_arithfunc(
    bound: int,
    indices: Sequence[int],
    field,
    max_numerator: int,
    max_denominator: int,
) -> ArithFunc:
    coefficients = _random_coefficients(len(indices), max_numerator, max_denominator)
    if field.name == "gaussian":
        imaginary = _random_coefficients(len(indices), max_numerator, max_denominator)
        keep = np.random.binomial(n=1, p=0.5, size=len(indices))
        coefficients = [
            field.convert((re, im if k else QQ.zero))
            for re, im, k in zip(coefficients, imaginary, keep)
        ]
    return ArithFunc.from_dict(dict(zip(indices, coefficients)), bound, field)


def _pick_indices(pool: np.ndarray, n_terms: int) -> np.ndarray:
    n_terms = min(n_terms, len(pool))
    return np.sort(np.random.choice(pool, size=n_terms, replace=False))


def _generate_class_function(
    bound: int,
    classes: Sequence[int],
    n_terms: int,
    max_index: Optional[int],
    field,
    max_numerator: int,
    max_denominator: int,
) -> ArithFunc:
    limit = bound if max_index is None else min(max_index, bound)
    class_of = get_sieve().class_index_array(limit)
    pool = np.flatnonzero(np.isin(class_of, list(classes)))
    if len(pool) == 0:
        raise DomainError("no index <= {} lies in the classes {}".format(limit, list(classes)))
    # one index of the top class keeps the filtration degree exact
    top = max(classes)
    top_pool = pool[class_of[pool] == top]
    indices = set(_pick_indices(pool, max(n_terms - 1, 0)).tolist())
    if len(top_pool):
        indices.add(int(np.random.choice(top_pool)))
    return _generate_arithfunc(
        bound, sorted(int(k) for k in indices), field, max_numerator, max_denominator
    )
