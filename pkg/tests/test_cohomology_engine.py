"""Tests for H^0, Z^1, H^1 and the regularity check on presentation 2-complexes."""
from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from repvar.catalog.dyck333 import dyck333_cocycle, dyck333_rho0
from repvar.catalog.lubotzky_magid import lm_cocycle, lm_rho, lm_rho_prime
from repvar.catalog.seifert import FIELD_ORDER as SEIFERT_ORDER, seifert_diagonal
from repvar.catalog.trefoil import FIELD_ORDER, TREFOIL, alpha_s
from repvar.cohomology_engine import (
    check_infinitesimal_regularity,
    coboundary_of,
    coboundary_space,
    cocycle_space,
    cohomology_dims,
    relator_jacobian,
    tangent_gap_report,
)
from repvar.constructions import central_representation, diagonal_representation
from repvar.cyclotomic import root_of_unity
from repvar.errors import DimensionMismatch, NonzeroTrace
from repvar.linalg import Matrix
from repvar.modules import AdjointModule
from repvar.representation import conjugate_by


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _central(n: int):
    roots = {2: -1, 3: root_of_unity(3, 1, FIELD_ORDER), 4: root_of_unity(4, 1, FIELD_ORDER)}
    return central_representation(TREFOIL, roots[n], n, FIELD_ORDER)


def _traceless(order: int) -> Matrix:
    return Matrix.from_rows([[1, 2], [3, -1]], order)


field_elements = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(
    lambda ab: ab[0] + ab[1] * root_of_unity(12, 1, FIELD_ORDER)
)

REPS_UNDER_CONJUGATION = {
    "alpha_1": lambda: alpha_s(1),
    "dyck333_rho0": dyck333_rho0,
    "central": lambda: _central(2),
}


# ===========================================================================
# Dimensions
# ===========================================================================

class TestCohomologyDims:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_central_representations(self, n):
        report = cohomology_dims(_central(n))
        d = n * n - 1
        assert report.h0 == d
        assert report.z1 == d
        assert report.b1 == 0
        assert report.h1 == d

    def test_dyck333_singular_point(self):
        report = cohomology_dims(dyck333_rho0())
        assert (report.h0, report.z1, report.h1) == (1, 4, 2)
        assert report.b1 == 2

    def test_isolated_non_reduced_character(self):
        report = cohomology_dims(lm_rho())
        assert (report.h0, report.z1, report.h1) == (0, 4, 1)
        assert cohomology_dims(lm_rho_prime()).h1 == 0

    def test_seifert_diagonal_points(self):
        assert cocycle_space(seifert_diagonal(root_of_unity(8, 1, SEIFERT_ORDER))).dimension == 3
        assert cocycle_space(seifert_diagonal(root_of_unity(6, 1, SEIFERT_ORDER))).dimension == 5

    def test_to_dict(self):
        data = cohomology_dims(dyck333_rho0()).to_dict()
        assert data["module_dim"] == 3
        assert data["h1"] == 2

    def test_relator_jacobian_shape(self):
        jacobian = relator_jacobian(AdjointModule(dyck333_rho0(), "sl"))
        assert jacobian.shape == (3 * 3, 2 * 3)
        assert jacobian.order == FIELD_ORDER

    @pytest.mark.parametrize("name", sorted(REPS_UNDER_CONJUGATION))
    @given(entries=st.lists(field_elements, min_size=4, max_size=4))
    @settings(max_examples=200, deadline=None)
    def test_conjugation_invariance(self, name, entries):
        s = Matrix(2, 2, entries, FIELD_ORDER)
        assume(not s.determinant().is_zero())
        r = REPS_UNDER_CONJUGATION[name]()
        before = cohomology_dims(r)
        after = cohomology_dims(conjugate_by(r, s))
        assert (after.h0, after.z1, after.b1, after.h1, after.h2_complex) == (
            before.h0, before.z1, before.b1, before.h1, before.h2_complex
        )


# ===========================================================================
# Cocycles and coboundaries
# ===========================================================================

class TestCocycleSpace:
    def test_explicit_cocycles(self):
        space = cocycle_space(dyck333_rho0())
        assert space.contains(dyck333_cocycle(1))
        assert space.contains(dyck333_cocycle(2))

    def test_non_cocycle(self):
        h = Matrix.diagonal([1, -1], FIELD_ORDER)
        zero = Matrix.zeros(2, 2, FIELD_ORDER)
        assert not cocycle_space(dyck333_rho0()).contains([h, zero])

    def test_lubotzky_magid_cocycle(self):
        assert cocycle_space(lm_rho()).contains(lm_cocycle())

    def test_basis_assignments_satisfy_relators(self):
        space = cocycle_space(alpha_s(1))
        for index in range(space.dimension):
            assert space.satisfies_relators(space.assignment(index))

    def test_wrong_number_of_values(self):
        with pytest.raises(DimensionMismatch):
            cocycle_space(dyck333_rho0()).contains([Matrix.zeros(2, 2, FIELD_ORDER)])

    def test_coboundaries_are_cocycles(self):
        r = alpha_s(1)
        assert cocycle_space(r).contains(coboundary_of(r, _traceless(FIELD_ORDER)))

    def test_coboundary_needs_trace_zero(self):
        with pytest.raises(NonzeroTrace):
            coboundary_of(alpha_s(1), Matrix.identity(2, FIELD_ORDER))

    def test_coboundary_space_spans_one_vector_per_basis_element(self):
        assert len(coboundary_space(alpha_s(1))) == 3


# ===========================================================================
# Regularity and tangent gap
# ===========================================================================

class TestRegularity:
    def test_irreducible_trefoil_point_is_regular(self):
        verdict = check_infinitesimal_regularity(alpha_s(1))
        assert verdict.regular
        assert verdict.expected_h1 == 1
        assert verdict.predicted_component_dim == 4

    def test_central_point_is_not_regular(self):
        verdict = check_infinitesimal_regularity(_central(2))
        assert not verdict.regular
        assert verdict.h1 == 3

    def test_boundary_tori_scale_expected_h1(self):
        assert check_infinitesimal_regularity(alpha_s(1), boundary_tori=2).expected_h1 == 2

    def test_boundary_tori_must_be_positive(self):
        with pytest.raises(DimensionMismatch):
            check_infinitesimal_regularity(alpha_s(1), boundary_tori=0)

    def test_diagonal_rank_three_is_regular(self):
        z = root_of_unity(24, 1, 24)
        verdict = check_infinitesimal_regularity(diagonal_representation(TREFOIL, [z, z ** 3, z ** -4], 24))
        assert verdict.h1 == 2
        assert verdict.expected_h1 == 2
        assert verdict.regular

    def test_eigenvalue_ratio_at_root_of_alexander_polynomial(self):
        z = root_of_unity(24, 1, 24)
        eigenvalues = [z ** 2, z ** -2, 1]
        assert eigenvalues[0] / eigenvalues[1] == root_of_unity(6, 1, 24)
        verdict = check_infinitesimal_regularity(diagonal_representation(TREFOIL, eigenvalues, 24))
        assert verdict.h1 == 4
        assert not verdict.regular


class TestTangentGap:
    def test_without_local_dimension(self):
        report = tangent_gap_report(dyck333_rho0())
        assert report.z1 == 4
        assert report.gap is None

    def test_strict_gap(self):
        report = tangent_gap_report(dyck333_rho0(), 3)
        assert report.gap == 1
        assert report.strict
        assert not report.regular_point

    def test_regular_point(self):
        report = tangent_gap_report(_central(2), 3)
        assert report.gap == 0
        assert report.regular_point
