import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewhecke.qsym import (
    QSymF,
    TruncatedPoly,
    char_tableaux,
    complete_homogeneous,
    determinant,
    elementary,
    family_for,
    fundamental_poly,
    gf_fillings,
    hooked_product,
    is_unimodular_basis,
    psi,
    skew_schur_poly,
    to_poly,
    two_alphabet_check,
)
from skewhecke.shapes import ShapeError, SkewShape, compositions, conjugate, is_partition, partitions, skew_shapes, subcompositions
from skewhecke.tableaux import DescentKind, FillingFamily

import oracles
from conftest import skew_shapes as shape_strategy

F = QSymF.F


def poly(nvars, terms):
    return TruncatedPoly.in_vars(nvars, terms)


class TestFundamental:
    def test_small_expansions(self):
        assert fundamental_poly((1, 1), 2) == poly(2, {(1, 1): 1})
        assert fundamental_poly((2,), 2) == poly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})

    def test_f12_in_three_variables(self):
        # i1 < i2 <= i3 over {1,2,3}
        assert fundamental_poly((1, 2), 3) == poly(3, {(1, 2, 0): 1, (1, 1, 1): 1, (1, 0, 2): 1, (0, 1, 2): 1})

    @pytest.mark.parametrize("alpha", [a for n in range(1, 5) for a in compositions(n)], ids=str)
    def test_matches_filter_oracle(self, alpha):
        for nvars in (1, 2, 3, 4):
            assert fundamental_poly(alpha, nvars).terms == oracles.fundamental(alpha, nvars)

    def test_needs_a_variable(self):
        with pytest.raises(ValueError):
            fundamental_poly((1,), 0)


class TestQSymF:
    def test_psi_examples(self):
        assert psi(F((1, 2))) == F((2, 1))
        assert psi(F((4,))) == F((1, 1, 1, 1))

    @given(st.dictionaries(st.sampled_from(list(compositions(5))), st.integers(-5, 5), max_size=8))
    def test_psi_involution(self, coeffs):
        f = QSymF(5, coeffs)
        assert psi(psi(f)) == f

    def test_degree_checked(self):
        with pytest.raises(ShapeError):
            QSymF(3, {(1, 1): 1})
        with pytest.raises(ValueError):
            F((1,)) + F((2,))

    def test_json_roundtrip_sorted(self):
        f = F((2, 1)) + 3 * F((1, 2))
        data = f.to_json()
        assert data == {"degree": 3, "terms": [{"comp": [1, 2], "coeff": 3}, {"comp": [2, 1], "coeff": 1}]}
        assert QSymF.from_json(data) == f

    def test_to_poly(self):
        assert to_poly(QSymF(2), 2).is_zero()
        assert to_poly(F((1, 2)), 3) == fundamental_poly((1, 2), 3)
        assert to_poly(2 * F((2,)) - F((1, 1)), 2) == poly(2, {(2, 0): 2, (1, 1): 1, (0, 2): 2})


class TestTruncatedPoly:
    def test_variables_must_agree(self):
        with pytest.raises(ValueError):
            TruncatedPoly.zero(2) + TruncatedPoly.zero(3)
        with pytest.raises(ValueError):
            TruncatedPoly(("x1",), {(1, 2): 1})

    @settings(max_examples=30)
    @given(*[st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-3, 3), max_size=4)] * 3)
    def test_ring_laws(self, a, b, c):
        p, q, r = poly(2, a), poly(2, b), poly(2, c)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert (p + q) - q == p

    def test_json_and_str(self):
        p = poly(2, {(2, 0): 2, (1, 1): -1})
        assert TruncatedPoly.from_json(p.to_json()) == p
        assert str(p) == "2*x1^2 - x1*x2"

    def test_embed(self):
        p = TruncatedPoly.in_vars(1, {(2,): 1}, prefix="y")
        assert p.embed(("x1", "y1")).terms == {(0, 2): 1}


class TestCharacteristics:
    def test_straight_examples(self):
        assert char_tableaux(SkewShape((1, 2)), "dI") == F((1, 2))
        assert char_tableaux(SkewShape((1, 2)), "rdI") == F((2, 1))

    @pytest.mark.parametrize(
        "outer, inner, kind, expected, expected_set",
        [
            ((2, 3, 2), (1, 2, 1), "dI", {(1, 1, 1): 1, (1, 2): 2, (2, 1): 2, (3,): 1}, {(1, 1, 1): 1, (1, 2): 1, (2, 1): 1}),
            ((2, 3, 2), (1, 2, 1), "rdI", {(1, 1, 1): 1, (1, 2): 2, (2, 1): 2, (3,): 1}, {(1, 2): 1, (2, 1): 1, (3,): 1}),
            ((2, 2), (1,), "dI", {(1, 2): 1, (2, 1): 1, (3,): 1}, {(1, 2): 1, (2, 1): 1}),
            ((2, 2), (1,), "rdI", {(1, 1, 1): 1, (1, 2): 1, (2, 1): 1}, {(1, 2): 1, (2, 1): 1}),
            ((2, 2), (1,), "Astar", {(1, 2): 1, (2, 1): 1, (3,): 1}, {(1, 2): 1, (3,): 1}),
            ((2, 2), (1,), "Abarstar", {(1, 1, 1): 1, (1, 2): 1, (2, 1): 1}, {(1, 1, 1): 1, (2, 1): 1}),
            ((1, 3), (), "Astar", {(4,): 1}, {(4,): 1}),
            ((1, 3), (), "Abarstar", {(1, 1, 1, 1): 1}, {(1, 1, 1, 1): 1}),
        ],
    )
    def test_frozen_expansions(self, outer, inner, kind, expected, expected_set):
        shape = SkewShape(outer, inner)
        assert char_tableaux(shape, kind).coeffs == expected
        assert char_tableaux(shape, kind, True).coeffs == expected_set

    @pytest.mark.parametrize("shape", [s for s in skew_shapes(5)], ids=str)
    def test_against_oracle(self, shape):
        for kind in DescentKind:
            for ext in (False, True):
                assert char_tableaux(shape, kind, ext).coeffs == oracles.characteristic(shape.outer, shape.inner, kind.value, ext)

    @pytest.mark.parametrize("shape", list(skew_shapes(7)), ids=str)
    def test_psi_exchanges_pairs(self, shape):
        for on_set in (False, True):
            assert psi(char_tableaux(shape, "dI", on_set)) == char_tableaux(shape, "rdI", on_set)
            assert psi(char_tableaux(shape, "Astar", on_set)) == char_tableaux(shape, "Abarstar", on_set)

    def test_straight_characteristics_form_a_basis(self):
        for n in range(1, 7):
            assert is_unimodular_basis(n, DescentKind.DI)

    def test_determinant(self):
        assert determinant([[2, 1], [1, 1]]) == 1
        assert determinant([[1, 2], [2, 4]]) == 0
        assert determinant([[0, 1], [1, 0]]) == -1


class TestGeneratingFunctions:
    def test_rows_only(self):
        family_weak = FillingFamily.parse("1st col <, rows <=")
        family_strict = FillingFamily.parse("1st col <, rows <")
        assert gf_fillings(SkewShape((2,)), family_weak, 2) == complete_homogeneous(2, 2)
        assert gf_fillings(SkewShape((2,)), family_strict, 3) == elementary(2, 3)

    @pytest.mark.parametrize("shape", [s for s in skew_shapes(5) if 1 <= s.size <= 4], ids=str)
    def test_against_oracle(self, shape):
        for family in FillingFamily.all():
            assert gf_fillings(shape, family, 3).terms == oracles.filling_gf(shape.outer, shape.inner, str(family), 3)

    def test_example_shape_all_families(self):
        shape = SkewShape((2, 3, 2), (1, 2, 1))
        for kind in DescentKind:
            for ext in (False, True):
                assert to_poly(char_tableaux(shape, kind, ext), 3) == gf_fillings(shape, family_for(kind, ext), 3)


class TestSchur:
    def test_examples(self):
        assert skew_schur_poly((1,), (), 2) == poly(2, {(1, 0): 1, (0, 1): 1})
        s21 = skew_schur_poly((2, 1), (), 3)
        assert len(s21.terms) == 7 and sum(s21.terms.values()) == 8
        assert skew_schur_poly((2, 2), (1,), 3) == gf_fillings(SkewShape((2, 2), (1,)), family_for("dI", True), 3)

    def test_rejects_compositions(self):
        with pytest.raises(ShapeError):
            skew_schur_poly((1, 2), (), 2)

    @pytest.mark.parametrize(
        "lam, mu",
        [(lam, mu) for n in range(1, 6) for lam in partitions(n) for mu in subcompositions(lam) if is_partition(mu)],
        ids=str,
    )
    def test_against_brute_force(self, lam, mu):
        nvars = min(sum(lam) - sum(mu), 3) or 1
        assert skew_schur_poly(lam, mu, nvars).terms == oracles.ssyt_gf(lam, mu, nvars)

    def test_transposed(self):
        lam, mu = (3, 2, 1), (1,)
        shape = SkewShape(lam, mu)
        want = skew_schur_poly(conjugate(lam), conjugate(mu), 5)
        assert to_poly(char_tableaux(shape, "rdI", True), 5) == want


class TestProducts:
    def test_examples(self):
        x = poly(2, {(1, 0): 1, (0, 1): 1})
        assert hooked_product(SkewShape((2, 3), (1, 2)), "h", 2) == x * x
        e1 = elementary(1, 3)
        assert hooked_product(SkewShape((2, 3, 2), (1, 2, 1)), "e", 3) == e1 * e1 * e1

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            hooked_product(SkewShape((2, 1), (1,)), "h", 2)
        with pytest.raises(ValueError):
            hooked_product(SkewShape((2,), (1,)), "q", 2)


class TestTwoAlphabets:
    def test_examples(self):
        assert two_alphabet_check((1, 2), "dI", 1, 2)
        assert two_alphabet_check((2, 2), "rdI", 2, 2)
        assert two_alphabet_check((2, 2), "rdI", 2, 0)

    def test_rejects_other_kinds(self):
        with pytest.raises(ValueError):
            two_alphabet_check((1,), "Astar", 1, 1)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(compositions(n)))), st.integers(1, 3), st.integers(0, 3))
    def test_random_alphabet_sizes(self, alpha, x, y):
        assert two_alphabet_check(alpha, "dI", x, y)
        assert two_alphabet_check(alpha, "rdI", x, y)


@settings(max_examples=25, deadline=None)
@given(shape_strategy(max_n=6, min_cells=1))
def test_faithful_degree(shape):
    n = shape.size
    for kind in DescentKind:
        f = char_tableaux(shape, kind)
        assert to_poly(f, n) == gf_fillings(shape, family_for(kind), n)
        assert sum(to_poly(f, n).terms.values()) >= f.total()
