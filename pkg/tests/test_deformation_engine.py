"""Tests for truncated formal deformations and the order-by-order obstruction."""
from __future__ import annotations

import pytest

from repvar.catalog.dyck333 import FIELD_ORDER, dyck333_cocycle, dyck333_rho0
from repvar.deformation_engine import SeriesMatrix, TruncatedDeformation, extend, obstruction_step, verify
from repvar.errors import DimensionMismatch, InvalidTruncation, NonzeroTrace
from repvar.linalg import Matrix


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

ZERO = Matrix.zeros(2, 2, FIELD_ORDER)
E12 = Matrix.unit(2, 0, 1, FIELD_ORDER)


def _make_deformation(*cochains) -> TruncatedDeformation:
    return TruncatedDeformation(dyck333_rho0(), [list(c) for c in cochains])


def _both() -> list[Matrix]:
    return [x + y for x, y in zip(dyck333_cocycle(1), dyck333_cocycle(2))]


# ===========================================================================
# Power series of matrices
# ===========================================================================

class TestSeriesMatrix:
    def test_exp_of_nilpotent(self):
        series = SeriesMatrix([ZERO, E12], 3, 2, FIELD_ORDER).exp()
        assert series.coefficient(0).is_identity()
        assert series.coefficient(1) == E12
        assert series.coefficient(2).is_zero()

    def test_exp_second_order_term(self):
        h = Matrix.diagonal([1, -1], FIELD_ORDER)
        series = SeriesMatrix([ZERO, h], 3, 2, FIELD_ORDER).exp()
        assert series.coefficient(2) * 2 == h @ h

    def test_exp_needs_zero_constant_term(self):
        with pytest.raises(ValueError):
            SeriesMatrix.identity(2, 3, FIELD_ORDER).exp()

    def test_truncation(self):
        t = SeriesMatrix([ZERO, Matrix.identity(2, FIELD_ORDER)], 2, 2, FIELD_ORDER)
        assert (t @ t).valuation() == 2

    def test_valuation(self):
        assert SeriesMatrix([ZERO, ZERO, E12], 4, 2, FIELD_ORDER).valuation() == 2


# ===========================================================================
# Truncated deformations
# ===========================================================================

class TestTruncatedDeformation:
    def test_order(self):
        assert _make_deformation().order == 0
        assert _make_deformation(dyck333_cocycle(1)).order == 1

    def test_cochain_must_be_traceless(self):
        with pytest.raises(NonzeroTrace):
            _make_deformation([Matrix.identity(2, FIELD_ORDER), ZERO])

    def test_cochain_needs_a_value_per_generator(self):
        with pytest.raises(DimensionMismatch):
            _make_deformation([ZERO])

    def test_verify_cocycle(self):
        assert verify(_make_deformation(dyck333_cocycle(1)))

    def test_verify_rejects_non_cocycle(self):
        h = Matrix.diagonal([1, -1], FIELD_ORDER)
        with pytest.raises(InvalidTruncation) as excinfo:
            verify(_make_deformation([h, ZERO]))
        assert excinfo.value.order == 1
        assert excinfo.value.relator_index == 0

    def test_evaluate_constant_term_is_base(self):
        d = _make_deformation(dyck333_cocycle(1))
        a = d.base.presentation.generator_words()[0]
        assert d.evaluate(a, 2).coefficient(0) == d.base.images[0]


# ===========================================================================
# Obstructions
# ===========================================================================

class TestObstruction:
    @pytest.mark.parametrize("index", [1, 2])
    def test_axis_cocycles_extend(self, index):
        result = obstruction_step(_make_deformation(dyck333_cocycle(index)))
        assert result.extendable
        assert result.order == 2
        assert len(result.extension) == 2
        assert verify(_make_deformation(dyck333_cocycle(index), result.extension))

    def test_sum_of_axis_cocycles_is_obstructed(self):
        result = obstruction_step(_make_deformation(_both()))
        assert not result.extendable
        assert result.extension is None
        assert any(not c.is_zero() for c in result.defect)

    def test_order_zero_always_extends(self):
        assert obstruction_step(_make_deformation()).extendable

    def test_extend_stops_at_obstruction(self):
        d, last = extend(_make_deformation(_both()), 3)
        assert d.order == 1
        assert not last.extendable

    def test_extend_one_step(self):
        d, last = extend(_make_deformation(dyck333_cocycle(1)), 1)
        assert d.order == 2
        assert last.extendable

    def test_to_dict(self):
        data = obstruction_step(_make_deformation(_both())).to_dict()
        assert data["order"] == 2
        assert data["extendable"] is False
        assert data["extension"] is None
