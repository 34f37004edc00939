"""Tests for exact linear algebra over cyclotomic fields and Laurent rings."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repvar.cyclotomic import CyclotomicNumber, root_of_unity
from repvar.errors import DimensionMismatch, DivisionByZero
from repvar.expressions import parse_laurent
from repvar.laurent import LaurentPoly
from repvar.linalg import (
    LaurentMatrix,
    Matrix,
    block_diagonal,
    characteristic_polynomial,
    kernel_basis,
    kronecker,
    minors_gcd,
    rank,
    solve,
)

ORDER = 12


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _m(rows) -> Matrix:
    return Matrix.from_rows(rows, ORDER)


def _lm(rows) -> LaurentMatrix:
    return LaurentMatrix.from_rows([[parse_laurent(e, ORDER) for e in row] for row in rows], ORDER)


@st.composite
def unimodular_matrices(draw, n: int = 3) -> Matrix:
    """Products of elementary matrices I + c E_ij."""
    result = Matrix.identity(n, ORDER)
    steps = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(-3, 3)), max_size=6
    ))
    for i, j, c in steps:
        if i != j:
            result = result @ (Matrix.identity(n, ORDER) + Matrix.unit(n, i, j, ORDER) * c)
    return result


integer_matrices = st.lists(
    st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=3, max_size=3
).map(_m)


laurent_entries = st.tuples(
    st.integers(-1, 1), st.lists(st.integers(-2, 2), min_size=1, max_size=3)
).map(lambda entry: LaurentPoly(entry[0], entry[1], ORDER))


@st.composite
def laurent_matrices(draw, rows: int = 3, cols: int = 3) -> LaurentMatrix:
    entries = draw(st.lists(laurent_entries, min_size=rows * cols, max_size=rows * cols))
    return LaurentMatrix(rows, cols, entries, ORDER)


# ===========================================================================
# Matrix
# ===========================================================================

class TestMatrixBasics:
    def test_identity_and_unit(self):
        assert Matrix.identity(2, ORDER).is_identity()
        assert Matrix.unit(2, 0, 1, ORDER) == _m([[0, 1], [0, 0]])

    def test_trace_and_determinant(self):
        m = _m([[2, 1], [1, 1]])
        assert m.trace() == 3
        assert m.determinant() == 1

    def test_inverse(self):
        i = root_of_unity(4, 1, ORDER)
        m = Matrix.from_rows([[i, 0], [1, -i]], ORDER)
        assert (m @ m.inverse()).is_identity()

    def test_singular_inverse(self):
        with pytest.raises(DivisionByZero):
            _m([[1, 2], [2, 4]]).inverse()

    def test_power(self):
        m = _m([[1, 1], [0, 1]])
        assert m ** 3 == _m([[1, 3], [0, 1]])
        assert m ** -1 == _m([[1, -1], [0, 1]])

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            _m([[1, 2]]) @ _m([[1, 2]])

    def test_wrong_entry_count(self):
        with pytest.raises(DimensionMismatch):
            Matrix(2, 2, [1, 2, 3], ORDER)

    def test_kronecker_blocks(self):
        a = _m([[1, 2], [3, 4]])
        b = Matrix.identity(2, ORDER)
        k = kronecker(a, b)
        assert k.shape == (4, 4)
        assert k[0, 2] == 2
        assert k[3, 1] == 3

    def test_block_diagonal(self):
        d = block_diagonal(_m([[2]]), _m([[1, 1], [0, 1]]))
        assert d.determinant() == 2
        assert d[0, 1] == 0

    def test_to_json(self):
        assert _m([[1, 0], [0, -1]]).to_json() == [["1", "0"], ["0", "-1"]]


class TestElimination:
    def test_kernel(self):
        m = _m([[1, 1, 0], [0, 0, 1]])
        basis = kernel_basis(m)
        assert len(basis) == 1
        assert m.apply(basis[0]) == (CyclotomicNumber.zero(ORDER),) * 2

    def test_kernel_of_empty_matrix_is_everything(self):
        assert len(kernel_basis(Matrix.zeros(0, 3, ORDER))) == 3

    def test_solve_inconsistent(self):
        assert solve(_m([[1, 1], [2, 2]]), [1, 3]) is None

    def test_solve(self):
        x = solve(_m([[2, 0], [0, 4]]), [1, 1])
        assert x[0] * 2 == 1 and x[1] * 4 == 1

    def test_characteristic_polynomial(self):
        assert str(characteristic_polynomial(_m([[2, 1], [1, 1]]))) == "t^2 - 3*t + 1"

    @given(unimodular_matrices())
    @settings(max_examples=200, deadline=None)
    def test_unimodular_inverse(self, m):
        assert m.determinant() == 1
        assert (m @ m.inverse()).is_identity()

    @given(integer_matrices)
    @settings(max_examples=200, deadline=None)
    def test_rank_nullity(self, m):
        assert rank(m) + len(kernel_basis(m)) == m.cols

    @given(integer_matrices, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
    @settings(max_examples=200, deadline=None)
    def test_solve_consistent_system(self, m, x0):
        rhs = m.apply([CyclotomicNumber.from_rational(ORDER, v) for v in x0])
        x = solve(m, rhs)
        assert x is not None
        assert m.apply(x) == rhs

    @given(unimodular_matrices(), unimodular_matrices())
    @settings(max_examples=200, deadline=None)
    def test_characteristic_polynomial_is_conjugation_invariant(self, m, s):
        assert characteristic_polynomial(s @ m @ s.inverse()) == characteristic_polynomial(m)


# ===========================================================================
# LaurentMatrix
# ===========================================================================

class TestLaurentMatrix:
    def test_determinant(self):
        assert _lm([["t", "1"], ["1", "t"]]).determinant() == parse_laurent("t^2 - 1", ORDER)

    def test_determinant_with_negative_powers(self):
        assert _lm([["t^-1", "0"], ["0", "t"]]).determinant() == parse_laurent("1", ORDER)

    def test_rank_over_fraction_field(self):
        assert _lm([["t", "t^2"], ["1", "t"]]).rank() == 1

    def test_specialize(self):
        m = _lm([["t", "1"], ["0", "t^-1"]]).specialize(2)
        assert m == Matrix.from_rows([[2, 1], [0, CyclotomicNumber.from_rational(ORDER, 1) / 2]], ORDER)

    def test_minors_gcd(self):
        assert minors_gcd(_lm([["t - 1", "t^2 - 1"]]), 1) == parse_laurent("t - 1", ORDER)

    def test_minors_gcd_of_size_zero(self):
        assert minors_gcd(_lm([["t"]]), 0) == parse_laurent("1", ORDER)

    def test_minors_gcd_out_of_range(self):
        with pytest.raises(DimensionMismatch):
            minors_gcd(_lm([["t"]]), 2)

    @given(laurent_matrices())
    @settings(max_examples=200, deadline=None)
    def test_minor_gcds_form_a_divisibility_chain(self, m):
        for size in range(3):
            lower = minors_gcd(m, size)
            upper = minors_gcd(m, size + 1)
            if lower.is_zero():
                assert upper.is_zero()
            elif not upper.is_zero():
                assert lower.divides(upper)
