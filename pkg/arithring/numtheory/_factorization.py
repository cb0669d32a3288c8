from dataclasses import dataclass
from operator import index
from typing import Iterable, Iterator, Tuple, Union

from arithring._constants import ZERO, Marker
from arithring._exceptions import DomainError

from ._sieve import get_sieve


@dataclass(frozen=True)
class Factorization:
    """
    Prime-power decomposition of a positive integer.

    Read column-wise, the same object is a separated monomial
    ``y_{i1}^(j1) ... y_{ir}^(jr)``: the column ``i`` is the 1-based index of the
    prime and the superscript ``j`` is its exponent. The empty factorization is
    the integer 1.

    Parameters
    ----------
    pairs
        ``(prime, exponent)`` pairs with strictly increasing primes and positive
        exponents.

    Examples
    --------
    >>> Factorization(((2, 2), (3, 1))).value
    12
    >>> Factorization(((2, 2), (3, 1))).columns()
    ((1, 2), (2, 1))
    """

    pairs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple((index(p), index(a)) for p, a in self.pairs)
        sieve = get_sieve()
        last = 1
        for p, a in pairs:
            if p <= last:
                raise DomainError(
                    "primes must be strictly increasing, got {}".format(pairs)
                )
            if a < 1:
                raise DomainError("exponents must be positive, got {}".format(pairs))
            if not sieve.is_prime(p):
                raise DomainError("{} is not prime".format(p))
            last = p
        object.__setattr__(self, "pairs", pairs)

    @property
    def value(self) -> int:
        """The integer this factorization reconstructs."""
        n = 1
        for p, a in self.pairs:
            n *= p ** a
        return n

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def columns(self) -> Tuple[Tuple[int, int], ...]:
        """The separated monomial as ``(column, superscript)`` pairs."""
        sieve = get_sieve()
        return tuple((sieve.prime_index(p), a) for p, a in self.pairs)

    @classmethod
    def from_columns(cls, columns: Iterable[Tuple[int, int]]) -> "Factorization":
        """Build the factorization of the separated monomial given by `columns`."""
        sieve = get_sieve()
        pairs = sorted((sieve.prime(i), j) for i, j in columns)
        return cls(tuple(pairs))

    def join(self, other: "Factorization") -> Union["Factorization", Marker]:
        """
        Product of two separated monomials.

        Returns :data:`~arithring.ZERO` when both use the same column, the exterior
        zero of the monoid.
        """
        if set(self.primes) & set(other.primes):
            return ZERO
        return Factorization(tuple(sorted(self.pairs + other.pairs)))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return " * ".join(
            str(p) if a == 1 else "{}^{}".format(p, a) for p, a in self.pairs
        )


def factor(n: int) -> Factorization:
    """
    Factor ``n`` with the shared smallest-prime-factor sieve.

    Parameters
    ----------
    n
        Integer in ``1..arithring.settings.sieve_bound``.

    Examples
    --------
    >>> factor(12).pairs
    ((2, 2), (3, 1))
    """
    return Factorization(tuple(get_sieve().factor_pairs(n)))


def phi_encode(m: Factorization) -> int:
    """Send a separated monomial to the positive integer it encodes."""
    return m.value


def phi_decode(n: int) -> Factorization:
    """Inverse of :func:`phi_encode`."""
    return factor(n)
