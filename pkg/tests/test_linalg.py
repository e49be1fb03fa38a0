from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algebra import linalg

entries = st.integers(min_value=-3, max_value=3)


def _dense_rows(matrix):
    return [{j: Fraction(v) for j, v in enumerate(row) if v} for row in matrix]


def test_inverse_of_a_small_matrix():
    inverse = linalg.inverse([[2, 1], [1, 1]])
    assert inverse == [[1, -1], [-1, 2]]


def test_singular_matrix_has_no_inverse():
    with pytest.raises(linalg.LinearAlgebraError):
        linalg.inverse([[1, 2], [2, 4]])


def test_solve_in_span():
    columns = [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(1)}]
    assert linalg.solve_in_span(columns, {0: Fraction(2), 1: Fraction(5)}, 2) == [2, 3]


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=1, max_size=4)))
def test_rank_nullity(matrix):
    ncols = len(matrix[0])
    rows = _dense_rows(matrix)
    kernel = linalg.nullspace(rows, ncols)
    assert linalg.rank(rows, ncols) + len(kernel) == ncols
    assert linalg.dense_rank(matrix) == linalg.rank(rows, ncols)
    for vector in kernel:
        for row in matrix:
            assert sum(Fraction(row[j]) * c for j, c in vector.items()) == 0
