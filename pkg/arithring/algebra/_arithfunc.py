import logging
from bisect import bisect_right
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

import numpy as np

from arithring._docs import _doc_params, doc_bound, doc_field
from arithring._exceptions import BoundMismatchError, DomainError

from ._field import CoefficientField, get_field

logger = logging.getLogger(__name__)

FieldLike = Union[str, CoefficientField, None]


class ArithFunc:
    """
    A function ``{1..N} -> K`` seen as an element of the truncated ring A_N.

    Values are stored densely in a read-only numpy object array of exact field
    elements; instances are immutable and hashable. Build them with
    :func:`e`, :func:`zero`, :func:`one`, :meth:`from_dict` or
    :meth:`from_values` rather than calling the constructor directly.

    Parameters
    ----------
    values
        Object array of length ``N + 1`` whose entry ``k`` is ``f(k)``; entry 0 is
        padding and must be zero.
    field
        Coefficient field the entries belong to.
    """

    def __init__(self, values: np.ndarray, field: CoefficientField):
        if len(values) < 2:
            raise DomainError("the bound must be a positive integer")
        values = np.asarray(values, dtype=object)
        values.flags.writeable = False
        self._values = values
        self._field = field
        self._support = None

    @classmethod
    @_doc_params(doc_bound=doc_bound, doc_field=doc_field)
    def from_dict(
        cls, mapping: Mapping[int, object], bound: int, field: FieldLike = None
    ) -> "ArithFunc":
        """\
        Build a function from ``{{index: coefficient}}``; missing indices are zero.

        Parameters
        ----------
        mapping
            Sparse values. Indices must lie in ``1..bound``.
        {doc_bound}
        {doc_field}
        """
        field = get_field(field)
        values = _empty(bound, field)
        for k, c in mapping.items():
            k = int(k)
            if not 1 <= k <= bound:
                raise DomainError("index {} outside 1..{}".format(k, bound))
            values[k] = values[k] + field.convert(c)
        return cls(values, field)

    @classmethod
    def from_values(cls, values: Sequence[object], field: FieldLike = None) -> "ArithFunc":
        """Build a function from the sequence ``f(1), ..., f(N)``."""
        field = get_field(field)
        padded = _empty(len(values), field)
        for k, c in enumerate(values, start=1):
            padded[k] = field.convert(c)
        return cls(padded, field)

    @property
    def bound(self) -> int:
        return len(self._values) - 1

    @property
    def field(self) -> CoefficientField:
        return self._field

    @property
    def values(self) -> np.ndarray:
        """Read-only array ``[f(1), ..., f(N)]``."""
        return self._values[1:]

    @property
    def support(self) -> Tuple[int, ...]:
        """Indices with a nonzero value, ascending."""
        if self._support is None:
            nonzero = np.flatnonzero(self._values[1:] != self._field.zero) + 1
            self._support = tuple(int(k) for k in nonzero)
        return self._support

    def items(self) -> Iterator[Tuple[int, object]]:
        """``(k, f(k))`` over the support."""
        return ((k, self._values[k]) for k in self.support)

    def to_dict(self) -> Dict[int, object]:
        return dict(self.items())

    def is_zero(self) -> bool:
        return len(self.support) == 0

    def __getitem__(self, k: int):
        if not 1 <= k <= self.bound:
            raise DomainError("index {} outside 1..{}".format(k, self.bound))
        return self._values[k]

    def __add__(self, other: "ArithFunc") -> "ArithFunc":
        if not isinstance(other, ArithFunc):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "ArithFunc") -> "ArithFunc":
        if not isinstance(other, ArithFunc):
            return NotImplemented
        check_compatible(self, other)
        return ArithFunc(self._values - other._values, self._field)

    def __neg__(self) -> "ArithFunc":
        return ArithFunc(-self._values, self._field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArithFunc):
            return NotImplemented
        return (
            self.bound == other.bound
            and self._field == other._field
            and self.support == other.support
            and all(self._values[k] == other._values[k] for k in self.support)
        )

    def __hash__(self) -> int:
        return hash((self.bound, self._field.name, tuple(self.items())))

    def sort_key(self) -> Tuple:
        """Deterministic ordering key: support first, then formatted coefficients."""
        return tuple((k, self._field.format(c)) for k, c in self.items())

    def __repr__(self) -> str:
        terms = ", ".join(
            "{}: {}".format(k, self._field.format(c)) for k, c in list(self.items())[:8]
        )
        if len(self.support) > 8:
            terms += ", ..."
        return "ArithFunc(bound={}, field={!r}, {{{}}})".format(
            self.bound, self._field.name, terms
        )


def _empty(bound: int, field: CoefficientField) -> np.ndarray:
    if bound < 1:
        raise DomainError("the bound must be a positive integer, got {}".format(bound))
    return np.full(bound + 1, field.zero, dtype=object)


def check_compatible(*funcs: ArithFunc):
    """Raise :class:`~arithring.BoundMismatchError` unless all share bound and field."""
    first = funcs[0]
    for f in funcs[1:]:
        if f.bound != first.bound:
            raise BoundMismatchError(
                "bounds differ: {} and {}".format(first.bound, f.bound)
            )
        if f.field != first.field:
            raise BoundMismatchError(
                "fields differ: {} and {}".format(first.field.name, f.field.name)
            )


@_doc_params(doc_bound=doc_bound, doc_field=doc_field)
def e(k: int, bound: int, field: FieldLike = None) -> ArithFunc:
    """\
    Indicator ``e_k`` of the index ``k``.

    ``e(1, N)`` is the multiplicative identity of A_N.

    Parameters
    ----------
    k
        Index in ``1..bound``.
    {doc_bound}
    {doc_field}

    Examples
    --------
    >>> e(6, 10).support
    (6,)
    """
    if not 1 <= k <= bound:
        raise DomainError("e({}) is not defined at bound {}".format(k, bound))
    field = get_field(field)
    values = _empty(bound, field)
    values[k] = field.one
    return ArithFunc(values, field)


def zero(bound: int, field: FieldLike = None) -> ArithFunc:
    """The zero function at `bound`."""
    field = get_field(field)
    return ArithFunc(_empty(bound, field), field)


def one(bound: int, field: FieldLike = None) -> ArithFunc:
    """The constant function 1 on ``1..bound``."""
    field = get_field(field)
    values = _empty(bound, field)
    values[1:] = field.one
    return ArithFunc(values, field)


def add(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    """Pointwise sum."""
    check_compatible(f, g)
    return ArithFunc(f._values + g._values, f.field)


def scale(c, f: ArithFunc) -> ArithFunc:
    """Pointwise product with the scalar `c`."""
    c = f.field.convert(c)
    if f.field.is_zero(c):
        return zero(f.bound, f.field)
    return ArithFunc(f._values * c, f.field)


def sum_functions(funcs: Iterable[ArithFunc], bound: int, field: FieldLike = None) -> ArithFunc:
    """Sum of `funcs`, the zero function when empty."""
    total = zero(bound, field)
    for f in funcs:
        total = add(total, f)
    return total


def support_below(support: Sequence[int], limit: int) -> Sequence[int]:
    """The prefix of the ascending `support` that is ``<= limit``."""
    return support[: bisect_right(support, limit)]
