import logging
import time
from functools import lru_cache
from operator import index
from typing import List, Tuple

import numpy as np
from numba import njit

from arithring._exceptions import DomainError
from arithring._settings import settings

logger = logging.getLogger(__name__)


@njit(cache=True)
def _smallest_prime_factors(bound):
    spf = np.zeros(bound + 1, dtype=np.int64)
    for i in range(2, bound + 1):
        if spf[i] == 0:
            spf[i] = i
            if i * i <= bound:
                for j in range(i * i, bound + 1, i):
                    if spf[j] == 0:
                        spf[j] = i
    return spf


class Sieve:
    """
    Smallest-prime-factor table for the integers ``1..bound``.

    Built once and never mutated afterwards, so a single instance can be
    shared between threads.

    Parameters
    ----------
    bound
        Largest integer covered by the table.
    """

    def __init__(self, bound: int):
        self.bound = bound
        self.spf = _smallest_prime_factors(bound)
        self.spf.flags.writeable = False
        candidates = np.arange(2, bound + 1)
        self.primes = candidates[self.spf[2:] == candidates]
        self.primes.flags.writeable = False

    def check(self, n) -> int:
        """Return `n` as a Python int, raising if it is outside ``1..bound``."""
        n = index(n)
        if n < 1:
            raise DomainError("expected a positive integer, got {}".format(n))
        if n > self.bound:
            raise DomainError(
                "{} exceeds the sieve bound {}; raise arithring.settings.sieve_bound".format(
                    n, self.bound
                )
            )
        return n

    def factor_pairs(self, n: int) -> List[Tuple[int, int]]:
        n = self.check(n)
        pairs = []
        while n > 1:
            p = int(self.spf[n])
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            pairs.append((p, a))
        return pairs

    def is_prime(self, n: int) -> bool:
        n = self.check(n)
        return n > 1 and int(self.spf[n]) == n

    def prime(self, i: int) -> int:
        """The ``i``-th prime, 1-based (``prime(1) == 2``)."""
        i = index(i)
        if i < 1:
            raise DomainError("prime indices start at 1, got {}".format(i))
        if i > len(self.primes):
            raise DomainError(
                "the sieve up to {} holds only {} primes".format(
                    self.bound, len(self.primes)
                )
            )
        return int(self.primes[i - 1])

    def prime_index(self, p: int) -> int:
        """The 1-based position of the prime ``p``."""
        if not self.is_prime(p):
            raise DomainError("{} is not prime".format(p))
        return int(np.searchsorted(self.primes, p)) + 1

    def omega_array(self, bound: int) -> np.ndarray:
        """``omega(n)`` for ``n = 0..bound`` (entry 0 is unused)."""
        self.check(bound)
        omega = np.zeros(bound + 1, dtype=np.int64)
        for p in self.primes[self.primes <= bound]:
            omega[p::p] += 1
        return omega

    def squarefree_mask(self, bound: int) -> np.ndarray:
        """Boolean mask of square-free ``n = 0..bound`` (entry 0 is False)."""
        self.check(bound)
        mask = np.ones(bound + 1, dtype=bool)
        mask[0] = False
        for p in self.primes[self.primes * self.primes <= bound]:
            mask[p * p :: p * p] = False
        return mask

    def class_index_array(self, bound: int) -> np.ndarray:
        """
        Index ``i`` with ``lp(n) = p_i`` for ``n = 0..bound``.

        Entries 0 and 1 are 0 since 1 lies in no class.
        """
        self.check(bound)
        classes = np.zeros(bound + 1, dtype=np.int64)
        if bound >= 2:
            classes[2:] = np.searchsorted(self.primes, self.spf[2 : bound + 1]) + 1
        return classes


@lru_cache(maxsize=2)
def _build_sieve(bound: int) -> Sieve:
    start = time.perf_counter()
    sieve = Sieve(bound)
    logger.debug(
        "Built smallest-prime-factor sieve up to {} in {:.2f}s".format(
            bound, time.perf_counter() - start
        )
    )
    return sieve


def get_sieve() -> Sieve:
    """Return the shared sieve for ``arithring.settings.sieve_bound``."""
    return _build_sieve(settings.sieve_bound)
