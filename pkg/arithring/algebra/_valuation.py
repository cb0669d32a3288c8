from dataclasses import dataclass
from functools import total_ordering
from typing import List, Optional, Union

from sympy.polys.domains import QQ

from arithring._constants import UNDEFINED, Marker
from arithring.numtheory import get_sieve

from ._arithfunc import ArithFunc, check_compatible
from ._convolution import uconv


@total_ordering
@dataclass(frozen=True)
class OrderValue:
    """
    Order of a function: the smallest index of its support.

    ``index`` is ``None`` for :data:`ABOVE_BOUND`, the order of anything that
    vanishes on ``1..N`` (the zero element of A_N). :data:`ABOVE_BOUND` compares
    greater than every finite order.
    """

    index: Optional[int] = None

    @property
    def is_finite(self) -> bool:
        return self.index is not None

    def __lt__(self, other: "OrderValue") -> bool:
        if not isinstance(other, OrderValue):
            return NotImplemented
        if self.index is None:
            return False
        return other.index is None or self.index < other.index

    def __str__(self) -> str:
        return "above-bound" if self.index is None else str(self.index)


def Finite(k: int) -> OrderValue:
    return OrderValue(int(k))


ABOVE_BOUND = OrderValue(None)


def order(f: ArithFunc) -> OrderValue:
    """``Finite(min supp f)``, or :data:`ABOVE_BOUND` for the zero function."""
    support = f.support
    return Finite(support[0]) if support else ABOVE_BOUND


def norm(f: ArithFunc):
    """
    Ultrametric norm ``1 / order(f)`` as an exact rational, 0 for the zero function.

    The coefficient field is trivially normed, so the norm only depends on the
    support.
    """
    k = order(f).index
    return QQ.zero if k is None else QQ(1, k)


def degree(f: ArithFunc) -> Union[int, Marker]:
    """
    Minimum of ``omega(k)`` over the support of `f`.

    Returns :data:`~arithring.UNDEFINED` for the zero function; no arithmetic is
    defined on that marker.
    """
    support = f.support
    if not support:
        return UNDEFINED
    omega = get_sieve().omega_array(support[-1])
    return int(min(omega[k] for k in support))


def pairing(f: ArithFunc, g: ArithFunc):
    """Bilinear pairing ``<f, g> = sum_k f(k) g(k)``; ``<f, e_k> = f(k)``."""
    check_compatible(f, g)
    total = f.field.zero
    for k, c in f.items():
        total += c * g._values[k]
    return total


def power_orders(f: ArithFunc, max_n: int) -> List[OrderValue]:
    """
    Orders of ``f, f^2, ...`` up to ``f^max_n``, stopping at the first power that
    vanishes at the bound (its :data:`ABOVE_BOUND` is the last entry).
    """
    orders = []
    power = f
    for n in range(1, max_n + 1):
        if n > 1:
            power = uconv(power, f)
        orders.append(order(power))
        if power.is_zero():
            break
    return orders


def is_topologically_nilpotent(f: ArithFunc) -> bool:
    """
    Whether the powers of `f` tend to zero.

    In A_N this happens exactly for the non-units, whose power orders increase
    strictly until they pass the bound. The zero function is included, its
    powers are all zero. Units have order 1 at every power.
    """
    return f.field.is_zero(f._values[1])
