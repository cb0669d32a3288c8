import math
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Tuple, Union

import numpy as np

from arithring._constants import ZERO, Marker
from arithring._exceptions import DomainError

from ._factorization import factor
from ._sieve import get_sieve


def unitary_product(k: int, m: int) -> Union[int, Marker]:
    """
    Product in the monoid-with-zero ``(N+, unitary product)``.

    Parameters
    ----------
    k, m
        Positive integers.

    Returns
    -------
    ``k * m`` when ``gcd(k, m) == 1``, else :data:`~arithring.ZERO`.
    """
    if k < 1 or m < 1:
        raise DomainError("unitary product is defined on positive integers")
    if math.gcd(k, m) != 1:
        return ZERO
    return k * m


def unitary_divisors(n: int) -> List[int]:
    """
    All ``d`` with ``d | n`` and ``gcd(d, n / d) == 1``, ascending.

    The unitary divisors of ``n`` are the products of subsets of its maximal
    prime-power factors, so there are ``2 ** omega(n)`` of them.

    Examples
    --------
    >>> unitary_divisors(12)
    [1, 3, 4, 12]
    """
    blocks = [p ** a for p, a in factor(n)]
    divisors = [1]
    for q in blocks:
        divisors += [d * q for d in divisors]
    return sorted(divisors)


@lru_cache(maxsize=4)
def unitary_divisor_table(bound: int) -> Tuple[Tuple[int, ...], ...]:
    """Unitary divisors of every ``n = 0..bound``, entry 0 empty."""
    get_sieve().check(bound)
    return ((),) + tuple(tuple(unitary_divisors(n)) for n in range(1, bound + 1))


def omega(n: int) -> int:
    """Number of distinct prime factors, ``omega(1) == 0``."""
    return len(factor(n))


def leading_prime(n: int) -> int:
    """Smallest prime dividing ``n``; undefined for ``n = 1``."""
    sieve = get_sieve()
    n = sieve.check(n)
    if n < 2:
        raise DomainError("the leading prime of 1 is undefined")
    return int(sieve.spf[n])


def class_index(n: int) -> int:
    """The ``i`` with ``leading_prime(n)`` the ``i``-th prime, i.e. ``n`` lies in ``A^i``."""
    return get_sieve().prime_index(leading_prime(n))


def prime(i: int) -> int:
    """The ``i``-th prime, ``prime(1) == 2``."""
    return get_sieve().prime(i)


def prime_index(p: int) -> int:
    """1-based index of the prime ``p``."""
    return get_sieve().prime_index(p)


def prime_support(n: int) -> Tuple[int, ...]:
    """Primes dividing ``n``, ascending."""
    return factor(n).primes


def is_prime(n: int) -> bool:
    return get_sieve().is_prime(n)


def is_squarefree(n: int) -> bool:
    return all(a == 1 for _, a in factor(n))


def is_prime_power(n: int) -> bool:
    """True for ``p ** a`` with ``a >= 1``; 1 is not a prime power."""
    return omega(n) == 1


def primorial(k: int) -> int:
    """Product of the first ``k`` primes, ``primorial(0) == 1``."""
    if k < 0:
        raise DomainError("primorial index must be nonnegative, got {}".format(k))
    return math.prod(prime(i) for i in range(1, k + 1))


def prime_powers(bound: int) -> np.ndarray:
    """All prime powers ``<= bound``, ascending."""
    sieve = get_sieve()
    sieve.check(bound)
    omega_ = sieve.omega_array(bound)
    return np.flatnonzero(omega_ == 1)


def encode_subset(subset: Iterable[int]) -> int:
    """Product of the primes ``p_i`` over the indices ``i`` in `subset`."""
    return math.prod(prime(i) for i in set(subset))


def decode_subset(n: int) -> FrozenSet[int]:
    """Prime indices of the square-free integer ``n``."""
    fact = factor(n)
    if any(a != 1 for _, a in fact):
        raise DomainError("{} is not square-free".format(n))
    return frozenset(i for i, _ in fact.columns())


def subset_product(a: Iterable[int], b: Iterable[int]) -> Union[FrozenSet[int], Marker]:
    """Union of two disjoint finite sets of prime indices, :data:`~arithring.ZERO` if they meet."""
    a, b = frozenset(a), frozenset(b)
    if a & b:
        return ZERO
    return a | b
