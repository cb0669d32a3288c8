import logging
from dataclasses import dataclass
from typing import Dict, Optional, Union

from arithring._constants import NOT_FOUND_WITHIN, NOT_POLYNOMIAL_TYPE, Marker
from arithring._exceptions import DomainError
from arithring.algebra import ArithFunc, CoefficientField, e, scale, uconv
from arithring.algebra._arithfunc import _empty
from arithring.numtheory import get_sieve, prime, primorial

logger = logging.getLogger(__name__)


@dataclass
class CanonicalDecomposition:
    """
    Splitting of a function along the leading-prime classes ``A^i``.

    Attributes
    ----------
    parts
        ``{i: f_i}`` with ``supp(f_i)`` inside ``A^i = {k : lp(k) = p_i}``; only
        nonzero parts are stored.
    constant_term
        ``f(1)``, which belongs to no class.
    bound
        Bound of the decomposed function.
    field
        Its coefficient field.
    """

    parts: Dict[int, ArithFunc]
    constant_term: object
    bound: int
    field: CoefficientField

    def reconstruct(self) -> ArithFunc:
        """``constant_term * e_1 + sum_i f_i``."""
        total = scale(self.constant_term, e(1, self.bound, self.field))
        for part in self.parts.values():
            total = total + part
        return total


def canonical_decompose(f: ArithFunc) -> CanonicalDecomposition:
    """
    Canonical decomposition of `f` by leading prime.

    Parameters
    ----------
    f
        Any function; its value at 1 becomes the constant term.

    Examples
    --------
    >>> dec = canonical_decompose(e(6, 10) + e(3, 10) + e(5, 10))
    >>> sorted(dec.parts)
    [1, 2, 3]
    """
    classes = get_sieve().class_index_array(f.bound)
    buckets = {}
    for k, c in f.items():
        if k == 1:
            continue
        buckets.setdefault(int(classes[k]), []).append((k, c))
    parts = {}
    for i in sorted(buckets):
        values = _empty(f.bound, f.field)
        for k, c in buckets[i]:
            values[k] = c
        parts[i] = ArithFunc(values, f.field)
    return CanonicalDecomposition(
        parts=parts, constant_term=f[1], bound=f.bound, field=f.field
    )


def filtration_degree(
    f: ArithFunc, prime_threshold: Optional[int] = None
) -> Union[int, Marker]:
    """
    Largest class index ``i`` with ``f_i != 0``; 0 when no part is nonzero.

    Every function of A_N is of polynomial type, so this alone cannot tell a
    genuine degree from a truncation artifact. Passing `prime_threshold` makes
    the function return :data:`~arithring.NOT_POLYNOMIAL_TYPE` as soon as `f`
    has support in a class whose leading prime exceeds the threshold.

    Parameters
    ----------
    f
        Function to inspect; the constant term is ignored.
    prime_threshold
        Largest leading prime regarded as genuine.
    """
    parts = canonical_decompose(f).parts
    if not parts:
        return 0
    top = max(parts)
    if prime_threshold is not None and prime(top) > prime_threshold:
        return NOT_POLYNOMIAL_TYPE
    return top


def in_Ik(f: ArithFunc, k: int) -> bool:
    """
    Membership in ``I_k``: `f` vanishes on every ``n <= N`` coprime to ``p_1 ... p_k``.

    ``n`` is coprime to ``p_1 ... p_k`` exactly when ``n = 1`` or its leading prime
    comes after ``p_k``, so the test reads off the classes of the support.
    ``I_0`` is the zero ideal.
    """
    if k < 0:
        raise DomainError("k must be nonnegative, got {}".format(k))
    classes = get_sieve().class_index_array(f.bound)
    return all(n != 1 and int(classes[n]) <= k for n in f.support)


def annihilates_squarefree_block(f: ArithFunc, K: int) -> bool:
    """
    Whether ``f ⊕ e_(p_1 ... p_K)`` is zero in A_N.

    Raises
    ------
    DomainError
        If ``p_1 ... p_K`` exceeds the bound, since the witness ``e`` is then not
        an element of A_N.
    """
    if K < 1:
        raise DomainError("K must be a positive integer, got {}".format(K))
    block = primorial(K)
    if block > f.bound:
        raise DomainError(
            "p_1...p_{} = {} exceeds the bound {}".format(K, block, f.bound)
        )
    return uconv(f, e(block, f.bound, f.field)).is_zero()


def nilpotency_index(f: ArithFunc, max_n: int) -> Union[int, Marker]:
    """
    Smallest ``n <= max_n`` with ``f^n = 0`` in A_N.

    Returns :data:`~arithring.NOT_FOUND_WITHIN` when no power up to `max_n`
    vanishes; units never do.
    """
    if max_n < 1:
        raise DomainError("max_n must be positive, got {}".format(max_n))
    power = f
    for n in range(1, max_n + 1):
        if n > 1:
            power = uconv(power, f)
        if power.is_zero():
            return n
    logger.debug("No vanishing power of order <= {}".format(max_n))
    return NOT_FOUND_WITHIN
