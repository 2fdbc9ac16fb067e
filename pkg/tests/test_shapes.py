import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewhecke.shapes import (
    Cell,
    ShapeError,
    SkewShape,
    comp_of,
    complement,
    composition,
    compositions,
    conjugate,
    contains,
    partitions,
    set_of,
    skew_shapes,
    subcompositions,
)

from oracles import skew_cells


def test_set_and_comp_examples():
    assert set_of((1, 2)) == {1}
    assert set_of((2, 1, 3)) == {2, 3}
    assert comp_of({2, 3}, 6) == (2, 1, 3)
    assert comp_of(set(), 4) == (4,)
    assert comp_of(set(), 0) == ()


def test_comp_of_rejects_out_of_range():
    with pytest.raises(ShapeError):
        comp_of({4}, 4)
    with pytest.raises(ShapeError):
        comp_of({0}, 3)


def test_complement():
    assert complement((1, 2)) == (2, 1)
    assert complement((4,)) == (1, 1, 1, 1)
    assert complement((1, 1, 2)) == (3, 1)


@given(st.integers(1, 9).flatmap(lambda n: st.sampled_from(list(compositions(n)))))
def test_set_comp_roundtrip_and_complement_involution(alpha):
    n = sum(alpha)
    assert comp_of(set_of(alpha), n) == alpha
    assert complement(complement(alpha)) == alpha
    assert set_of(complement(alpha)) == set(range(1, n)) - set_of(alpha)


def test_composition_counts():
    assert [len(list(compositions(n))) for n in range(7)] == [1, 1, 2, 4, 8, 16, 32]
    assert [len(list(partitions(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_composition_validation():
    with pytest.raises(ShapeError):
        composition([2, 0, 1])
    with pytest.raises(ShapeError):
        SkewShape((2, 1), (1, 2))
    with pytest.raises(ShapeError):
        SkewShape((2,), (1, 1))


def test_contains_and_subcompositions():
    assert contains((), (3,))
    assert contains((2, 1), (2, 2, 1))
    assert not contains((3,), (2, 2))
    subs = list(subcompositions((2, 1)))
    assert subs == [(), (1,), (2,), (1, 1), (2, 1)]


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)
    with pytest.raises(ShapeError):
        conjugate((1, 2))


def test_cells_bottom_row_first():
    shape = SkewShape((2, 2, 3, 2, 4), (2, 1, 2))
    assert shape.size == 8
    assert shape.cells[:3] == (Cell(2, 2), Cell(3, 3), Cell(4, 1))
    assert shape.leftmost_column_cells == (Cell(4, 1), Cell(5, 1))
    assert shape.row_slices == ((0, 0), (0, 1), (1, 2), (2, 4), (4, 8))


def test_column_constraints_skip_gaps():
    # column 2 of (2,1,2): cells (1,2) and (3,2) with a gap in row 2
    shape = SkewShape((2, 1, 2), (1,))
    idx = shape.index
    assert shape.column_constraints[idx[Cell(3, 2)]] == [idx[Cell(1, 2)]]
    assert shape.column_constraints[idx[Cell(3, 1)]] == [idx[Cell(2, 1)]]


def test_skew_shape_enumeration_count():
    shapes = list(skew_shapes(3))
    # per size: sum over alpha of the number of beta inside it
    assert len(shapes) == 1 + 2 + 6 + 17


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(list(skew_shapes(n, n)))))
def test_cells_match_oracle(shape):
    assert list(shape.cells) == skew_cells(shape.outer, shape.inner)


def test_json_and_str():
    shape = SkewShape((4, 2, 4), (2, 1, 2))
    assert SkewShape.from_json(shape.to_json()) == shape
    assert str(shape) == "(4,2,4)/(2,1,2)"
    assert str(SkewShape((1, 2))) == "(1,2)"
