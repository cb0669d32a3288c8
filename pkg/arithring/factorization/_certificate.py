from dataclasses import dataclass
from typing import Sequence, Tuple

from arithring._exceptions import DomainError
from arithring.algebra import ArithFunc, check_compatible, degree, e, is_unit, uconv


@dataclass(frozen=True)
class FactorizationCertificate:
    """
    A claimed factorization ``target = factors[0] ⊕ ... ⊕ factors[-1]``.

    ``verified`` is True only when the product was recomputed exactly in A_N
    and matched the target.
    """

    target: ArithFunc
    factors: Tuple[ArithFunc, ...]
    verified: bool

    def product(self) -> ArithFunc:
        return _product(self.factors, self.target)


def _product(factors: Sequence[ArithFunc], target: ArithFunc) -> ArithFunc:
    result = e(1, target.bound, target.field)
    for factor in factors:
        result = uconv(result, factor)
        if result.is_zero():
            break
    return result


def verify_factorization(
    target: ArithFunc, factors: Sequence[ArithFunc]
) -> FactorizationCertificate:
    """
    Check ``target == factors[0] ⊕ ... ⊕ factors[-1]`` exactly.

    Parameters
    ----------
    target
        Function to factor.
    factors
        Claimed factors; an empty list stands for ``e_1``.

    Examples
    --------
    >>> verify_factorization(e(30, 100), [e(2, 100), e(3, 100), e(5, 100)]).verified
    True
    """
    check_compatible(target, *factors)
    product = _product(factors, target)
    return FactorizationCertificate(target, tuple(factors), verified=product == target)


def factorization_length_bound(f: ArithFunc) -> int:
    """
    Upper bound on the number of non-unit factors of `f`.

    Degrees add under ⊕ and non-units have degree at least 1, so no
    factorization of `f` into non-units has more than ``degree(f)`` factors.
    """
    if f.is_zero():
        raise DomainError("the zero function has no length bound")
    if is_unit(f):
        raise DomainError("units have no factorization into non-units")
    return degree(f)
