from fractions import Fraction

from hypothesis import given, settings, strategies as st

from parafock.linalg import (
    bareiss_echelon,
    in_row_span,
    integerize,
    rank,
    rank_and_nullspace,
)


def test_rank_simple():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[0, 0], [0, 0]]) == 0


def test_rank_rational_entries():
    mat = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
    assert rank(mat) == 2


def test_nullspace_known():
    rk, null = rank_and_nullspace([[1, 2], [2, 4]])
    assert rk == 1
    assert len(null) == 1
    x = null[0]
    assert x[0] * 1 + x[1] * 2 == 0


def test_nullspace_full_rank_empty():
    rk, null = rank_and_nullspace([[2, 1], [1, 1]])
    assert rk == 2 and null == []


def test_integerize():
    assert integerize([Fraction(-2, 3), Fraction(1, 3)]) == [2, -1]
    assert integerize([Fraction(4), Fraction(-2)]) == [2, -1]


def test_in_row_span():
    rows = [[1, 0, 1], [0, 1, 1]]
    assert in_row_span(rows, [1, 1, 2])
    assert not in_row_span(rows, [0, 0, 1])


matrices = st.lists(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=4, max_size=4),
    min_size=1,
    max_size=5,
)


@given(matrices)
@settings(max_examples=80)
def test_nullspace_annihilates(mat):
    rk, null = rank_and_nullspace(mat)
    assert rk + len(null) == 4
    for x in null:
        for row in mat:
            assert sum(Fraction(a) * b for a, b in zip(row, x)) == 0


@given(matrices)
@settings(max_examples=60)
def test_echelon_preserves_rank(mat):
    rows, pivots = bareiss_echelon(mat)
    assert len(rows) == len(pivots) == rank(mat)
    # pivot columns strictly increase
    assert all(a < b for a, b in zip(pivots, pivots[1:]))
