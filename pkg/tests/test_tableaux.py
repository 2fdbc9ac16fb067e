import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewhecke.shapes import SkewShape, skew_shapes
from skewhecke.tableaux import (
    FAMILY_OF,
    DescentKind,
    FillingFamily,
    Tableau,
    TableauError,
    descent_set,
    generate_fillings,
    generate_nset,
    generate_set,
    generate_sit,
    inv,
    inv_alpha_beta,
    inversions,
    mixed_inversions,
    phi,
    s0,
    scol,
    srow,
)

import oracles
from conftest import skew_shapes as shape_strategy

SMALL = list(skew_shapes(6))


def rows(t):
    return [tuple(r) for r in t.rows]


class TestSpecialTableaux:
    def test_straight_example(self):
        # displayed diagrams: rows (1,6),(2),(3,4,5) from the bottom
        shape = SkewShape((2, 1, 3))
        assert rows(s0(shape)) == [(1, 6), (2,), (3, 4, 5)]
        assert rows(srow(shape)) == [(1, 2), (3,), (4, 5, 6)]
        assert rows(scol(shape)) == [(1, 4), (2,), (3, 5, 6)]

    def test_label_312_gives_other_fillings(self):
        shape = SkewShape((3, 1, 2))
        assert rows(s0(shape)) == [(1, 5, 6), (2,), (3, 4)]

    def test_skew_with_first_column(self):
        shape = SkewShape((2, 2, 3, 2, 4), (2, 1, 2))
        assert rows(s0(shape)) == [(), (8,), (7,), (1, 6), (2, 3, 4, 5)]
        assert rows(srow(shape)) == [(), (1,), (2,), (3, 4), (5, 6, 7, 8)]
        assert rows(scol(shape)) == [(), (3,), (6,), (1, 4), (2, 5, 7, 8)]

    def test_skew_without_first_column(self):
        shape = SkewShape((5, 4, 6), (2, 1, 2))
        assert rows(s0(shape)) == [(8, 9, 10), (5, 6, 7), (1, 2, 3, 4)]
        assert rows(srow(shape)) == [(1, 2, 3), (4, 5, 6), (7, 8, 9, 10)]
        assert rows(scol(shape)) == [(2, 5, 8), (1, 3, 6), (4, 7, 9, 10)]

    @pytest.mark.parametrize("shape", SMALL, ids=str)
    def test_special_tableaux_are_standard_immaculate(self, shape):
        for t in (s0(shape), srow(shape)):
            assert t.is_sit()
        assert srow(shape).is_set()


class TestGeneration:
    @pytest.mark.parametrize("shape", SMALL, ids=str)
    def test_matches_filter_all_oracle(self, shape):
        want_sit = sorted(tuple(f[c] for c in shape.cells) for f in oracles.sit(shape.outer, shape.inner))
        want_set = sorted(tuple(f[c] for c in shape.cells) for f in oracles.set_(shape.outer, shape.inner))
        assert sorted(t.entries for t in generate_sit(shape)) == want_sit
        assert sorted(t.entries for t in generate_set(shape)) == want_set

    @pytest.mark.parametrize(
        "outer, inner, n_sit, n_set",
        [
            ((2, 3, 2), (1, 2, 1), 6, 3),
            ((4, 2, 4), (2, 1, 2), 30, 10),
            ((2, 3), (1, 2), 2, 2),
            ((3, 1, 2), (), 10, 9),
            ((2, 2), (), 3, 2),
            ((2, 1, 3), (), 5, 3),
            ((3, 3), (1,), 10, 5),
            ((2, 2, 2), (1, 1), 12, 3),
            ((1, 3, 2), (1,), 6, 5),
        ],
    )
    def test_frozen_counts(self, outer, inner, n_sit, n_set):
        shape = SkewShape(outer, inner)
        assert len(generate_sit(shape)) == n_sit
        assert len(generate_set(shape)) == n_set
        assert len(generate_nset(shape)) == n_sit - n_set

    def test_canonical_order_is_deterministic(self):
        shape = SkewShape((2, 3, 2), (1, 2, 1))
        tabs = generate_sit(shape)
        words = [t.reading_word() for t in tabs]
        assert words == sorted(words)
        assert tabs == generate_sit(shape)

    def test_empty_shape(self):
        shape = SkewShape((2, 1), (2, 1))
        assert [t.entries for t in generate_sit(shape)] == [()]


class TestTableau:
    def test_from_rows_validation(self):
        shape = SkewShape((2, 2))
        with pytest.raises(TableauError):
            Tableau.from_rows(shape, [(1, 2), (3,)])
        with pytest.raises(TableauError):
            Tableau.from_rows(shape, [(1, 2), (3, 4), (5,)])

    def test_predicates(self):
        shape = SkewShape((2, 2))
        assert Tableau.from_rows(shape, [(1, 4), (2, 3)]).is_sit()
        assert not Tableau.from_rows(shape, [(1, 4), (2, 3)]).is_set()
        assert not Tableau.from_rows(shape, [(2, 4), (1, 3)]).is_sit()
        assert not Tableau.from_rows(shape, [(1, 1), (2, 3)]).is_standard()

    def test_json_roundtrip(self):
        t = s0(SkewShape((4, 2, 4), (2, 1, 2)))
        assert Tableau.from_json(t.to_json()) == t

    def test_str_marks_inner_cells(self):
        t = srow(SkewShape((2, 3), (1, 2)))
        assert str(t) == "· · 2\n· 1"


class TestInversions:
    def test_permutation_example(self):
        assert inversions([5, 4, 2, 3, 1]) == 9

    def test_reading_word_example(self):
        t = Tableau.from_rows(
            SkewShape((2, 2, 3, 2, 4)),
            [(1, 2), (3, 9), (4, 5, 6), (7, 11), (8, 10, 12, 13)],
        )
        assert t.reading_word() == [13, 12, 10, 8, 11, 7, 6, 5, 4, 9, 3, 2, 1]

    def test_inv_alpha_beta_example(self):
        assert inv_alpha_beta((2, 2, 3, 2, 4), (2, 1, 2)) == 38

    def test_inv_alpha_beta_rejects_non_contained(self):
        with pytest.raises(ValueError):
            inv_alpha_beta((2, 1), (1, 2))


class TestPhi:
    def test_example(self):
        shape = SkewShape((2, 2, 3, 2, 4), (2, 1, 2))
        t = Tableau.from_rows(shape, [(), (4,), (1,), (2, 6), (3, 5, 7, 8)])
        assert rows(phi(t)) == [(1, 2), (3, 9), (4, 5, 6), (7, 11), (8, 10, 12, 13)]

    def test_rejects_bad_input(self):
        shape = SkewShape((2, 2), (1,))
        bad = Tableau.from_rows(shape, [(3,), (1, 2)])
        assert bad.is_sit()
        with pytest.raises(TableauError):
            phi(Tableau.from_rows(shape, [(1,), (3, 2)]))
        with pytest.raises(TableauError):
            phi(bad, srow(SkewShape((2,))))

    @settings(max_examples=60, deadline=None)
    @given(shape_strategy(max_n=7), st.data())
    def test_inversion_split(self, shape, data):
        inner = SkewShape(shape.inner)
        t = data.draw(st.sampled_from(generate_sit(shape)))
        u = data.draw(st.sampled_from(generate_sit(inner)))
        big = phi(t, u)
        assert big.is_sit()
        m = inner.size
        closed = inv_alpha_beta(shape.outer, shape.inner)
        assert mixed_inversions(big.reading_word(), m) == closed
        assert inv(big) == inv(t) + inv(u) + closed


class TestDescents:
    def test_descent_sets_straight(self):
        t = srow(SkewShape((1, 2)))
        assert descent_set(t, DescentKind.DI) == {1}
        assert descent_set(t, DescentKind.RDI) == {2}
        assert descent_set(t, DescentKind.ASTAR) == set()
        assert descent_set(t, DescentKind.ABARSTAR) == {1, 2}

    @pytest.mark.parametrize("shape", [s for s in SMALL if s.size <= 5], ids=str)
    def test_against_oracle(self, shape):
        for t in generate_sit(shape):
            f = dict(zip(shape.cells, t.entries))
            for kind in DescentKind:
                assert descent_set(t, kind) == oracles.descents(f, kind.value)

    def test_parse(self):
        assert DescentKind.parse("ABARSTAR") is DescentKind.ABARSTAR
        with pytest.raises(ValueError):
            DescentKind.parse("nope")


class TestFillings:
    def test_family_parse(self):
        assert FillingFamily.parse("1st col<,rows<=") == FAMILY_OF[DescentKind.DI, False]
        with pytest.raises(ValueError):
            FillingFamily.parse("cols >")

    @pytest.mark.parametrize("shape", [s for s in SMALL if 1 <= s.size <= 4], ids=str)
    def test_generating_functions_match_oracle(self, shape):
        from collections import Counter

        for family in FillingFamily.all():
            got = Counter()
            for t in generate_fillings(shape, family, 3):
                got[tuple(t.entries.count(k) for k in (1, 2, 3))] += 1
            assert dict(got) == oracles.filling_gf(shape.outer, shape.inner, str(family), 3)

    def test_max_entry_validated(self):
        with pytest.raises(ValueError):
            generate_fillings(SkewShape((1,)), FillingFamily.all()[0], 0)
