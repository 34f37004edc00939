"""Tests for metabelian representations built from twisted cocycles."""
from __future__ import annotations

import pytest

from repvar.catalog.trefoil import FIELD_ORDER, TREFOIL
from repvar.cohomology_engine import check_infinitesimal_regularity
from repvar.cyclotomic import root_of_unity
from repvar.errors import CocycleConditionViolated, DimensionMismatch, RootMismatch
from repvar.irreducibility import is_irreducible
from repvar.linalg import Matrix
from repvar.metabelian import build_metabelian, diagonal_limit, p_matrix, solve_metabelian_cocycles, to_gln_form
from repvar.modules import jordan_block
from repvar.presentation_parser import parse_word_list
from repvar.representation import character_of


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _zeta(n: int, k: int = 1):
    return root_of_unity(n, k, FIELD_ORDER)


def _make_metabelian(lam=None):
    return build_metabelian(TREFOIL, _zeta(6), 2, [[1], [0]], lam)


WORDS = parse_word_list("x, y, x y^-1, x y x^-1 y^-1, x^2 y", TREFOIL)


# ===========================================================================
# Cocycles
# ===========================================================================

class TestSolveMetabelianCocycles:
    def test_at_root_of_alexander_polynomial(self):
        assert solve_metabelian_cocycles(TREFOIL, _zeta(6), 2).dimension == 2

    def test_off_root(self):
        space = solve_metabelian_cocycles(TREFOIL, _zeta(4), 2)
        assert space.dimension == 1
        assert space.contains([[1], [-_zeta(4) + 1]])


# ===========================================================================
# Construction
# ===========================================================================

class TestBuildMetabelian:
    def test_gl_form(self):
        r = _make_metabelian()
        assert r.rank == 2
        assert r.determinant_target is None
        assert r.image("x")[1, 0] == 0

    def test_sl_normalisation(self):
        r = _make_metabelian(_zeta(12))
        assert r.is_special_linear()
        assert not is_irreducible(r).irreducible

    def test_sl_form_is_nonabelian_and_regular(self):
        r = _make_metabelian(_zeta(12))
        x, y = r.image("x"), r.image("y")
        assert x @ y != y @ x
        verdict = check_infinitesimal_regularity(r)
        assert verdict.h1 == 1
        assert verdict.regular
        assert verdict.predicted_component_dim == 4

    def test_root_mismatch(self):
        with pytest.raises(RootMismatch):
            _make_metabelian(1)

    def test_cocycle_condition(self):
        with pytest.raises(CocycleConditionViolated) as excinfo:
            build_metabelian(TREFOIL, _zeta(4), 2, [[1], [0]])
        assert excinfo.value.relator_index == 0

    def test_value_length(self):
        with pytest.raises(DimensionMismatch):
            build_metabelian(TREFOIL, _zeta(6), 3, [[1], [0]])

    def test_value_count(self):
        with pytest.raises(DimensionMismatch):
            build_metabelian(TREFOIL, _zeta(6), 2, [[1]])


class TestNormalForms:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_p_matrix_is_an_involution(self, n):
        p = p_matrix(n, FIELD_ORDER)
        assert (p @ p).is_identity()

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_p_matrix_inverts_the_jordan_block(self, n):
        p = p_matrix(n, FIELD_ORDER)
        j = jordan_block(n, FIELD_ORDER)
        assert p @ j @ p.inverse() == j.inverse()

    def test_to_gln_form_negates_first_coordinate(self):
        r = _make_metabelian(_zeta(12))
        assert to_gln_form(r).image("x")[0, 1] == -r.image("x")[0, 1]
        assert character_of(to_gln_form(r), WORDS).agrees_with(character_of(r, WORDS))

    def test_diagonal_limit_has_the_same_character(self):
        r = _make_metabelian(_zeta(12))
        limit = diagonal_limit(TREFOIL, _zeta(12), 2)
        assert character_of(r, WORDS).agrees_with(character_of(limit, WORDS))

    def test_diagonal_limit_eigenvalues(self):
        lam = _zeta(12)
        limit = diagonal_limit(TREFOIL, lam, 3)
        assert limit.image("x") == Matrix.diagonal([lam ** 6, lam ** -3, lam ** -3], FIELD_ORDER)
