import logging
import math
from collections import defaultdict
from itertools import combinations, product
from typing import Dict, Iterable, List, Tuple

from arithring._exceptions import DomainError
from arithring.algebra import ArithFunc, scale
from arithring.utils import track

from ._certificate import FactorizationCertificate, verify_factorization

logger = logging.getLogger(__name__)

Sparse = Tuple[Tuple[int, object], ...]


def _sparse_uconv(a: Sparse, b: Sparse, bound: int, field) -> Dict[int, object]:
    out = {}
    for i, x in a:
        for j, y in b:
            n = i * j
            if n <= bound and math.gcd(i, j) == 1:
                out[n] = out.get(n, field.zero) + x * y
    return {n: c for n, c in out.items() if not field.is_zero(c)}


def _candidates(cap: int, coeffs: List[object], max_support: int) -> List[Sparse]:
    candidates = []
    for size in range(1, max_support + 1):
        for indices in combinations(range(2, cap + 1), size):
            for values in product(coeffs, repeat=size):
                candidates.append(tuple(zip(indices, values)))
    return candidates


def atom_search(
    f: ArithFunc,
    support_cap: int,
    coeff_set: Iterable[object],
    max_support: int = 2,
    progress_bar: bool = True,
) -> List[FactorizationCertificate]:
    """
    Exhaustive search for two-factor factorizations ``f = a ⊕ b`` into non-units.

    Both factors range over the functions supported in ``2..support_cap`` with
    at most `max_support` nonzero values taken from `coeff_set`. Pairs that differ
    by a scalar, ``(c a, b / c)``, or by the order of the factors count once.
    Each returned certificate holds the first factor with leading coefficient 1
    and the second scaled so that the product is `f`.

    An empty result only means that no factorization was found within these
    bounds; nothing is claimed about `f` being an atom.

    Parameters
    ----------
    f
        Nonzero target.
    support_cap
        Largest index allowed in a factor's support.
    coeff_set
        Candidate coefficients; zeros are dropped.
    max_support
        Largest support size of a factor.
    progress_bar
        Show a progress bar over the first factor.

    Examples
    --------
    >>> certificates = atom_search(e(30, 400), 20, [1, -1, 2])
    >>> all(c.verified for c in certificates)
    True
    """
    if f.is_zero():
        raise DomainError(
            "the zero function is a product of zero divisors; refusing to search"
        )
    if max_support < 1:
        raise DomainError("max_support must be positive, got {}".format(max_support))
    field = f.field
    bound = f.bound
    coeffs = []
    for c in coeff_set:
        c = field.convert(c)
        if not field.is_zero(c) and c not in coeffs:
            coeffs.append(c)
    cap = min(support_cap, bound)
    candidates = _candidates(cap, coeffs, max_support)
    by_index = defaultdict(list)
    for pos, candidate in enumerate(candidates):
        for k, _ in candidate:
            by_index[k].append(pos)
    target = f.to_dict()

    found = {}
    for pos_a in track(
        range(len(candidates)),
        description="Atom search",
        disable=not progress_bar,
        unit="candidate",
    ):
        a = candidates[pos_a]
        needed = set()
        for i, _ in a:
            for n in target:
                if n % i == 0:
                    j = n // i
                    if 2 <= j <= cap and math.gcd(i, j) == 1:
                        needed.add(j)
        partners = set()
        for j in needed:
            partners.update(by_index[j])
        for pos_b in sorted(partners):
            if pos_b < pos_a:
                continue
            b = candidates[pos_b]
            if _sparse_uconv(a, b, bound, field) != target:
                continue
            x = _normalized(a, bound, field)
            y = _normalized(b, bound, field)
            first, second = sorted((x, y), key=ArithFunc.sort_key)
            key = (first.sort_key(), second.sort_key())
            if key not in found:
                factor = scale(a[0][1] * b[0][1], second)
                found[key] = verify_factorization(f, [first, factor])

    certificates = [found[key] for key in sorted(found)]
    if certificates:
        logger.info(
            "Atom search: {} candidate factors, {} factorizations".format(
                len(candidates), len(certificates)
            )
        )
    else:
        logger.info(
            "Atom search: {} candidate factors, no factorization found within bounds".format(
                len(candidates)
            )
        )
    return certificates


def _normalized(sparse: Sparse, bound: int, field) -> ArithFunc:
    lead = sparse[0][1]
    return ArithFunc.from_dict({k: c / lead for k, c in sparse}, bound, field)
