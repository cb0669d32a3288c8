import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from arithring._exceptions import BoundMismatchError, DomainError
from arithring.algebra import (
    ArithFunc,
    CoefficientField,
    check_compatible,
    e,
    get_field,
    order,
    scale,
)
from arithring.algebra._arithfunc import FieldLike
from arithring.algebra._linalg import rref

logger = logging.getLogger(__name__)


@dataclass
class BasisFamily:
    """
    Echelonized family ``{g_k}`` indexed by order, with ``g_k(k) = 1``.

    Attributes
    ----------
    entries
        ``{k: g_k}`` where ``g_k`` has order ``k`` and leading coefficient 1.
    bound
        Common bound of the entries.
    field
        Common coefficient field.
    """

    entries: Dict[int, ArithFunc]
    bound: int
    field: CoefficientField

    def __post_init__(self):
        self.entries = dict(sorted(self.entries.items()))
        for k, g in self.entries.items():
            if g.bound != self.bound or g.field != self.field:
                raise DomainError(
                    "entry {} does not live at the family's bound and field".format(k)
                )
            if order(g).index != k or g[k] != self.field.one:
                raise DomainError(
                    "entry {} must have order {} and value 1 there".format(k, k)
                )

    @classmethod
    def standard(cls, bound: int, field: FieldLike = None) -> "BasisFamily":
        """The family ``{e_k : 1 <= k <= bound}``."""
        field = get_field(field)
        return cls({k: e(k, bound, field) for k in range(1, bound + 1)}, bound, field)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(self.entries)

    def __getitem__(self, k: int) -> ArithFunc:
        return self.entries[k]

    def __contains__(self, k: int) -> bool:
        return k in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


@dataclass
class ResidueNonzero:
    """
    Result of :func:`express_in_basis` for a function outside the span.

    Attributes
    ----------
    residue
        What is left after the greedy elimination stopped; its order is not
        the order of any basis entry.
    terms
        The ``(k, a_k)`` consumed before stopping.
    """

    residue: ArithFunc
    terms: List[Tuple[int, object]]


def echelon_basis(
    generators: Sequence[ArithFunc],
    bound: Optional[int] = None,
    field: FieldLike = None,
) -> BasisFamily:
    """
    Reduced echelon family spanning the same subspace as `generators`.

    Indices are processed in ascending order, so each pivot is the order of
    its basis element.

    Parameters
    ----------
    generators
        Functions at a common bound and field.
    bound
        Bound of the family when `generators` is empty.
    field
        Field of the family when `generators` is empty.

    Examples
    --------
    >>> family = echelon_basis([scale(5, e(4, 10))])
    >>> family[4] == e(4, 10)
    True
    """
    if not generators:
        if bound is None:
            raise DomainError("an empty generator list needs an explicit bound")
        return BasisFamily({}, bound, get_field(field))
    check_compatible(*generators)
    bound, field = generators[0].bound, generators[0].field
    columns = sorted(set().union(*(g.support for g in generators)))
    rows = [[g._values[k] for k in columns] for g in generators]
    reduced, pivots = rref(rows, len(columns), field)
    entries = {}
    for row, pivot in zip(reduced, pivots):
        values = {columns[c]: v for c, v in enumerate(row) if not field.is_zero(v)}
        entries[columns[pivot]] = ArithFunc.from_dict(values, bound, field)
    logger.debug("Echelon basis pivots at orders {}".format(sorted(entries)))
    return BasisFamily(entries, bound, field)


def express_in_basis(
    f: ArithFunc, G: BasisFamily
) -> Union[List[Tuple[int, object]], ResidueNonzero]:
    """
    Greedy expansion ``f = sum_k a_k g_k``.

    At each step the coefficient of the lowest remaining index is removed with
    the basis element of that order, so the residual order strictly increases.

    Returns
    -------
    The ``(k, a_k)`` in increasing ``k`` when the residual reaches zero, else a
    :class:`ResidueNonzero`. Against the standard basis the coefficients are
    the values ``f(k)``.
    """
    if f.bound != G.bound or f.field != G.field:
        raise BoundMismatchError(
            "function and basis live at different bounds or fields"
        )
    residue = f
    terms = []
    while not residue.is_zero():
        k = order(residue).index
        if k not in G:
            return ResidueNonzero(residue=residue, terms=terms)
        a = residue[k]
        terms.append((k, a))
        residue = residue - scale(a, G[k])
    return terms
