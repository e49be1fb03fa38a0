"""
Exact rational linear algebra on sparse vectors.

Vectors are ``Dict[int, Fraction]`` (coordinate -> nonzero value); matrices
are lists of such rows. Row reduction is delegated to sympy's
``DomainMatrix`` over ``QQ`` in sparse format.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

SparseVector = Dict[int, Fraction]


class LinearAlgebraError(Exception):
    """Exception raised for inconsistent systems or singular matrices."""
    pass


def to_qq(value: Fraction):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _domain_matrix(rows: Sequence[SparseVector], ncols: int) -> DomainMatrix:
    data = {}
    for i, row in enumerate(rows):
        entries = {j: to_qq(v) for j, v in row.items() if v != 0}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def rref(rows: Sequence[SparseVector], ncols: int) -> Tuple[List[SparseVector], Tuple[int, ...]]:
    """
    Reduced row echelon form.

    Args:
        rows: Matrix rows as sparse vectors
        ncols: Number of columns

    Returns:
        (nonzero reduced rows in pivot order, pivot columns)
    """
    if not rows or ncols == 0 or all(not row for row in rows):
        return [], ()
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    rep = reduced.to_sparse().rep
    result = []
    for i in range(len(pivots)):
        row = rep.get(i, {})
        result.append({j: from_qq(v) for j, v in row.items() if v})
    return result, tuple(pivots)


def rank(rows: Sequence[SparseVector], ncols: int) -> int:
    """Rank of a matrix given by sparse rows."""
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[SparseVector], ncols: int) -> List[SparseVector]:
    """
    Basis of the right kernel {v : M v = 0}, one vector per free column.

    The vector for free column j has v_j = 1 and zeros on the other free
    columns, so the basis is in echelon form with respect to the free columns.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = {free: Fraction(1)}
        for row, pivot in zip(reduced, pivots):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        basis.append(vector)
    return basis


def transpose(rows: Sequence[SparseVector]) -> Dict[int, SparseVector]:
    """Column view of sparse rows: column index -> {row index: value}."""
    columns: Dict[int, SparseVector] = {}
    for i, row in enumerate(rows):
        for j, value in row.items():
            if value:
                columns.setdefault(j, {})[i] = value
    return columns


def inverse(matrix: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """
    Exact inverse of a dense square matrix via rref of [M | I].

    Raises:
        LinearAlgebraError: If the matrix is not square or singular
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise LinearAlgebraError(f"Cannot invert a non-square {n}x? matrix")
    if n == 0:
        return []
    augmented = []
    for i, row in enumerate(matrix):
        sparse = {j: Fraction(v) for j, v in enumerate(row) if v != 0}
        sparse[n + i] = Fraction(1)
        augmented.append(sparse)
    reduced, pivots = rref(augmented, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise LinearAlgebraError(f"Singular {n}x{n} matrix")
    return [[row.get(n + j, Fraction(0)) for j in range(n)] for row in reduced]


def solve_in_span(columns: Sequence[SparseVector], target: SparseVector,
                  nrows: Optional[int] = None) -> Optional[List[Fraction]]:
    """
    Find coefficients c with sum_j c_j columns[j] = target.

    Free variables are set to zero. When the trailing columns are linearly
    independent modulo the leading ones, their coefficients are uniquely
    determined.

    Args:
        columns: Spanning vectors
        target: Vector to express
        nrows: Ambient dimension (inferred when None)

    Returns:
        The coefficient list, or None if target is not in the span
    """
    m = len(columns)
    if nrows is None:
        used = [k for col in columns for k in col] + list(target)
        nrows = max(used) + 1 if used else 0
    rows: List[SparseVector] = [dict() for _ in range(nrows)]
    for j, column in enumerate(columns):
        for i, value in column.items():
            if value:
                rows[i][j] = Fraction(value)
    for i, value in target.items():
        if value:
            rows[i][m] = Fraction(value)
    reduced, pivots = rref(rows, m + 1)
    if m in pivots:
        return None
    solution = [Fraction(0)] * m
    for row, pivot in zip(reduced, pivots):
        solution[pivot] = row.get(m, Fraction(0))
    return solution


def is_independent(vectors: Sequence[SparseVector], ncols: int) -> bool:
    return rank(vectors, ncols) == len(vectors)


def dense_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a dense matrix given as a list of rows."""
    if not matrix:
        return 0
    ncols = len(matrix[0])
    return rank([{j: Fraction(v) for j, v in enumerate(row) if v != 0} for row in matrix], ncols)


def dense_nullspace(matrix: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Right kernel of a dense matrix, as dense vectors."""
    rows = [{j: Fraction(v) for j, v in enumerate(row) if v != 0} for row in matrix]
    return [[vec.get(j, Fraction(0)) for j in range(ncols)] for vec in nullspace(rows, ncols)]
