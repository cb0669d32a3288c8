from typing import List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from ._field import CoefficientField

Rows = List[List[object]]


def _to_domain_matrix(rows: Sequence[Sequence[object]], ncols: int, field: CoefficientField):
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), field.domain)


def _from_domain_matrix(matrix, field: CoefficientField) -> Rows:
    rows = matrix.convert_to(field.domain).to_list()
    return [[field.convert(a) for a in row] for row in rows]


def rref(
    rows: Sequence[Sequence[object]], ncols: int, field: CoefficientField
) -> Tuple[Rows, Tuple[int, ...]]:
    """
    Reduced row echelon form over the exact field.

    Returns the nonzero rows of the reduced matrix and their pivot columns.
    """
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _to_domain_matrix(rows, ncols, field).rref()
    pivots = tuple(int(p) for p in pivots)
    return _from_domain_matrix(reduced, field)[: len(pivots)], pivots


def nullspace(rows: Sequence[Sequence[object]], ncols: int, field: CoefficientField) -> Rows:
    """
    Basis of ``{x : rows @ x = 0}``, itself in reduced row echelon form.

    Each basis vector therefore has leading coefficient 1.
    """
    if ncols == 0:
        return []
    if not rows:
        return [
            [field.one if c == r else field.zero for c in range(ncols)] for r in range(ncols)
        ]
    basis = _to_domain_matrix(rows, ncols, field).nullspace()
    if basis.shape[0] == 0:
        return []
    reduced, _ = rref(_from_domain_matrix(basis, field), ncols, field)
    return reduced
