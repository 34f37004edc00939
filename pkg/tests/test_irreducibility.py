"""Tests for the Burnside irreducibility test and invariant-subspace witnesses."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repvar.catalog.trefoil import FIELD_ORDER, TREFOIL, alpha_s, trefoil_rho_st
from repvar.constructions import diagonal_representation, direct_sum
from repvar.cyclotomic import CyclotomicNumber, root_of_unity
from repvar.irreducibility import algebra_span, field_eigenvalues, is_invariant, is_irreducible
from repvar.linalg import Matrix
from repvar.presentation_parser import parse_presentation
from repvar.representation import conjugate_by, make_rep


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

ONE = CyclotomicNumber.one(FIELD_ORDER)
ZERO = CyclotomicNumber.zero(FIELD_ORDER)


def _roots(pairs) -> set[str]:
    return {str(value) for value, _ in pairs}


# Includes the lines s = 0, t = 0, s + t = 2 and their three crossings.
GRID = [-2, -1, 0, Fraction(1, 2), 1, 2, 3]

field_elements = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)).map(
    lambda abc: abc[0] + abc[1] * root_of_unity(12, 1, FIELD_ORDER) + abc[2] * root_of_unity(4, 1, FIELD_ORDER)
)

FREE_GROUP = parse_presentation("gens x, y; rel ;")


def _make_hidden_triangular():
    """Upper-triangular images over Q(i) with eigenvalues 1 + i, conjugated off the axes."""
    i = root_of_unity(4, 1, 4)
    a = 1 + i
    x = Matrix.from_rows([[a, 1], [0, a.inverse()]], 4)
    y = Matrix.from_rows([[a ** 2, 3], [0, a ** -2]], 4)
    s = Matrix.from_rows([[1, 1], [1, 2]], 4)
    return conjugate_by(make_rep(FREE_GROUP, [x, y]), s), s


# ===========================================================================
# Burnside test
# ===========================================================================

class TestIsIrreducible:
    def test_generic_alpha_s(self):
        verdict = is_irreducible(alpha_s(1))
        assert verdict.irreducible
        assert verdict.algebra_dimension == 4
        assert verdict.witness_found
        assert verdict.invariant_subspace is None

    def test_alpha_0_fixes_a_line(self):
        verdict = is_irreducible(alpha_s(0))
        assert not verdict.irreducible
        assert verdict.witness_found
        assert len(verdict.invariant_subspace) == 1
        assert is_invariant(alpha_s(0), verdict.invariant_subspace)

    def test_alpha_2i_fixes_a_line(self):
        verdict = is_irreducible(alpha_s(2 * root_of_unity(4, 1, FIELD_ORDER)))
        assert not verdict.irreducible
        assert is_invariant(alpha_s(2 * root_of_unity(4, 1, FIELD_ORDER)), verdict.invariant_subspace)

    def test_rank_three_family(self):
        assert is_irreducible(trefoil_rho_st(1, 2)).irreducible
        assert not is_irreducible(trefoil_rho_st(0, 0)).irreducible
        assert not is_irreducible(trefoil_rho_st(1, 1)).irreducible

    def test_direct_sum_is_reducible(self):
        verdict = is_irreducible(direct_sum(alpha_s(1), alpha_s(2)))
        assert not verdict.irreducible
        assert verdict.algebra_dimension < 16
        assert is_invariant(direct_sum(alpha_s(1), alpha_s(2)), verdict.invariant_subspace)

    def test_witness_with_eigenvalues_off_the_unit_circle(self):
        r, s = _make_hidden_triangular()
        verdict = is_irreducible(r)
        assert not verdict.irreducible
        assert verdict.algebra_dimension == 3
        assert verdict.witness_found
        assert verdict.eigenvalues_split
        assert len(verdict.invariant_subspace) == 1
        assert is_invariant(r, verdict.invariant_subspace)
        assert is_invariant(r, [s.column_vector(0)])

    def test_diagonal_representation(self):
        zeta = root_of_unity(12, 1, FIELD_ORDER)
        verdict = is_irreducible(diagonal_representation(TREFOIL, [zeta, zeta.inverse()], FIELD_ORDER))
        assert not verdict.irreducible
        assert verdict.algebra_dimension == 2

    def test_spanning_words_start_with_identity(self):
        words, matrices = algebra_span(alpha_s(1))
        assert words[0].is_identity()
        assert matrices[0].is_identity()
        assert len(words) == 4

    def test_json_uses_generator_names(self):
        data = is_irreducible(alpha_s(1)).to_json(TREFOIL)
        assert data["spanning_words"][0] == "1"
        assert data["irreducible"] is True


class TestIsInvariant:
    def test_lines(self):
        r = alpha_s(0)
        assert is_invariant(r, [(ONE, ZERO)])
        assert not is_invariant(r, [(ZERO, ONE)])

    def test_empty_and_whole_space(self):
        r = alpha_s(1)
        assert is_invariant(r, [])
        assert is_invariant(r, [(ONE, ZERO), (ZERO, ONE)])


class TestRankThreeTrefoilFamily:
    @pytest.mark.parametrize("s", GRID)
    @pytest.mark.parametrize("t", GRID)
    def test_verdict_matches_reducibility_lines(self, s, t):
        r = trefoil_rho_st(s, t)
        verdict = is_irreducible(r)
        reducible = s == 0 or t == 0 or s + t == 2
        assert verdict.irreducible is not reducible
        if reducible:
            assert verdict.witness_found
            assert 0 < len(verdict.invariant_subspace) < 3
            assert is_invariant(r, verdict.invariant_subspace)

    @given(field_elements, field_elements)
    @settings(max_examples=20, deadline=None)
    def test_generators_have_orders_two_and_three(self, s, t):
        r = trefoil_rho_st(s, t)
        x, y = r.image("x"), r.image("y")
        assert (x @ x).is_identity()
        assert (y @ y @ y).is_identity()


# ===========================================================================
# Eigenvalues in the context field
# ===========================================================================

class TestFieldEigenvalues:
    def test_roots_of_unity(self):
        values, split = field_eigenvalues(Matrix.from_rows([[0, -1], [1, 0]], 12))
        assert split
        assert _roots(values) == {str(root_of_unity(4, 1, 12)), str(root_of_unity(4, 3, 12))}

    def test_not_split_in_small_field(self):
        _, split = field_eigenvalues(Matrix.from_rows([[0, -1], [1, 0]], 3))
        assert not split

    def test_rational_eigenvalues(self):
        values, split = field_eigenvalues(Matrix.from_rows([[2, 0], [0, 3]], 12))
        assert split
        assert _roots(values) == {"2", "3"}

    def test_nilpotent(self):
        values, split = field_eigenvalues(Matrix.from_rows([[0, 1], [0, 0]], 12))
        assert split
        assert values == [(ZERO, 2)]

    def test_gaussian_integer_eigenvalues(self):
        i = root_of_unity(4, 1, 4)
        values, split = field_eigenvalues(Matrix.from_rows([[1, -1], [1, 1]], 4))
        assert split
        assert {value for value, _ in values} == {1 + i, 1 - i}

    def test_eigenvalue_in_larger_field(self):
        # (1 + i) / 2 and its conjugate, seen from Q(zeta_12)
        i = root_of_unity(4, 1, 12)
        half = Matrix.from_rows([[1, -1], [1, 1]], 12) * Fraction(1, 2)
        values, split = field_eigenvalues(half)
        assert split
        assert {value for value, _ in values} == {(1 + i) / 2, (1 - i) / 2}

    def test_repeated_eigenvalue_off_the_unit_circle(self):
        i = root_of_unity(4, 1, 4)
        values, split = field_eigenvalues(Matrix.from_rows([[1 + i, 1], [0, 1 + i]], 4))
        assert split
        assert values == [(1 + i, 2)]
