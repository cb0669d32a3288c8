import math
from dataclasses import dataclass, field
from typing import List

from arithring._exceptions import DomainError
from arithring.algebra import RATIONAL, e, one, uconv
from arithring.numtheory import is_prime


@dataclass(frozen=True)
class TranscriptRow:
    """One candidate generator ``e_k`` checked against ``e_L``."""

    k: int
    divides: bool
    coprime_split: bool
    value: object

    @property
    def fails(self) -> bool:
        return not self.coprime_split and self.value == 0


@dataclass
class NonFinitenessTranscript:
    """
    Record that ``e_L`` is not in the ideal generated by ``e_2, ..., e_cap``.

    Attributes
    ----------
    L
        The prime tested.
    cap
        Largest generator index.
    rows
        One :class:`TranscriptRow` per ``k`` in ``2..cap``.
    """

    L: int
    cap: int
    rows: List[TranscriptRow] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        """True when every candidate decomposition fails."""
        return all(row.fails for row in self.rows)

    def lines(self) -> List[str]:
        out = []
        for row in self.rows:
            out.append(
                "k={}: {} = i*{} with gcd(i,{})=1: {}; (1 ⊕ e_{})({}) = {}; {}".format(
                    row.k,
                    self.L,
                    row.k,
                    row.k,
                    "yes" if row.coprime_split else "no",
                    row.k,
                    self.L,
                    row.value,
                    "fails" if row.fails else "succeeds",
                )
            )
        out.append(
            "e_{} in the ideal generated by e_2..e_{}: {}".format(
                self.L, self.cap, "no" if self.holds else "not excluded"
            )
        )
        return out


def demo_not_finitely_generated(L: int, generator_cap: int) -> NonFinitenessTranscript:
    """
    Check that ``e_L`` has no representation ``sum_k f_k ⊕ e_k`` with ``2 <= k <= cap``.

    For each ``k`` the transcript records whether ``L = i * k`` with
    ``gcd(i, k) = 1`` is possible, and evaluates ``(1 ⊕ e_k)(L)``, the sum of
    ``(e_i ⊕ e_k)(L)`` over all ``i <= L``. Both vanish for a prime ``L``
    above the cap, so every candidate fails.

    Parameters
    ----------
    L
        A prime larger than `generator_cap`.
    generator_cap
        Largest generator index.
    """
    if not is_prime(L):
        raise DomainError("{} is not prime".format(L))
    if L <= generator_cap:
        raise DomainError("L must exceed the generator cap {}".format(generator_cap))
    ones = one(L, RATIONAL)
    transcript = NonFinitenessTranscript(L=L, cap=generator_cap)
    for k in range(2, generator_cap + 1):
        divides = L % k == 0
        coprime_split = divides and math.gcd(L // k, k) == 1
        value = uconv(ones, e(k, L, ones.field))[L]
        transcript.rows.append(
            TranscriptRow(
                k=k, divides=divides, coprime_split=coprime_split, value=value
            )
        )
    return transcript
