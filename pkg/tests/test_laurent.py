"""Tests for Laurent polynomials: parsing, calculus, division and associates."""
from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from repvar.cyclotomic import root_of_unity
from repvar.errors import EvalAtZero, InputError, ParseError
from repvar.expressions import parse_laurent
from repvar.laurent import LaurentPoly, NotDivisible, associated, laurent_gcd

ORDER = 12


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _poly(text: str) -> LaurentPoly:
    return parse_laurent(text, ORDER)


@st.composite
def laurent_polys(draw) -> LaurentPoly:
    low = draw(st.integers(min_value=-2, max_value=2))
    coeffs = draw(st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=4))
    return LaurentPoly(low, coeffs, ORDER)


# ===========================================================================
# Parsing and formatting
# ===========================================================================

class TestParseLaurent:
    def test_round_trip_text(self):
        assert str(_poly("t^2 - t + 1")) == "t^2 - t + 1"

    def test_negative_exponent(self):
        p = _poly("zeta(3)*t^-1 + 2")
        assert p.low == -1
        assert p.high == 0
        assert p.coefficient(-1) == root_of_unity(3, 1, ORDER)

    def test_irrational_coefficient_is_bracketed(self):
        assert str(_poly("zeta(12)*t")) == "(zeta(12))*t"

    def test_division_by_binomial_rejected(self):
        with pytest.raises(ParseError):
            _poly("1/(t + 1)")

    def test_negative_power_of_binomial_rejected(self):
        with pytest.raises(ParseError):
            _poly("(t + 1)^-1")

    def test_division_by_monomial(self):
        assert _poly("(t^2 + t)/t") == _poly("t + 1")

    def test_to_json(self):
        assert _poly("t^2 - t + 1").to_json() == {"2": "1", "1": "-1", "0": "1"}

    def test_zero(self):
        zero = _poly("t - t")
        assert zero.is_zero()
        assert str(zero) == "0"
        assert zero.low == 0


# ===========================================================================
# Calculus
# ===========================================================================

class TestCalculus:
    def test_derivative(self):
        assert str(_poly("t^2 - t + 1").derivative()) == "2*t - 1"

    def test_derivative_of_negative_power(self):
        assert _poly("t^-1").derivative() == _poly("-t^-2")

    def test_root_at_sixth_root_of_unity(self):
        eta = root_of_unity(6, 1, ORDER)
        assert _poly("t^2 - t + 1").evaluate(eta).is_zero()

    def test_evaluate_at_zero(self):
        with pytest.raises(EvalAtZero):
            _poly("t + 1").evaluate(0)

    def test_substitute_inverse(self):
        assert _poly("t^2 - 3*t + 1").substitute_inverse() == _poly("t^-2 - 3*t^-1 + 1")

    def test_negative_power_of_non_monomial(self):
        with pytest.raises(InputError):
            _poly("t + 1") ** -1


# ===========================================================================
# Division and gcd
# ===========================================================================

class TestDivision:
    def test_exact_divide(self):
        assert _poly("t^2 - 1").exact_divide(_poly("t - 1")) == _poly("t + 1")

    def test_exact_divide_with_shift(self):
        assert _poly("t - t^-1").exact_divide(_poly("t + 1")) == _poly("1 - t^-1")

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            _poly("t^2 + 1").exact_divide(_poly("t - 1"))

    def test_gcd(self):
        g = laurent_gcd([_poly("(t - 1)*(t + 1)"), _poly("(t - 1)*(t - 2)")])
        assert g == _poly("t - 1")

    def test_gcd_of_coprime_is_one(self):
        assert laurent_gcd([_poly("t + 1"), _poly("t - 1")]) == LaurentPoly.one(ORDER)

    def test_gcd_of_nothing_is_zero(self):
        assert laurent_gcd([], ORDER).is_zero()


class TestAssociated:
    def test_units_ignored(self):
        p = _poly("t^2 - t + 1")
        assert associated(p, p.shift(3).scale(5))

    def test_symmetric_polynomial(self):
        p = _poly("t^2 - 3*t + 1")
        assert associated(p, p.substitute_inverse())

    def test_non_associates(self):
        assert not associated(_poly("t + 1"), _poly("t + 2"))

    def test_normalize(self):
        assert _poly("2*t^3 + 4*t^2").normalize() == _poly("t + 2")


# ===========================================================================
# Ring properties
# ===========================================================================

class TestRingProperties:
    @given(laurent_polys(), laurent_polys())
    @settings(max_examples=200, deadline=None)
    def test_product_divides_back(self, p, q):
        assume(not q.is_zero())
        assert (p * q).exact_divide(q) == p

    @given(laurent_polys())
    @settings(max_examples=200, deadline=None)
    def test_substitute_inverse_is_involution(self, p):
        assert p.substitute_inverse().substitute_inverse() == p

    @given(laurent_polys(), laurent_polys())
    @settings(max_examples=200, deadline=None)
    def test_derivative_is_a_derivation(self, p, q):
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()

    @given(laurent_polys(), laurent_polys())
    @settings(max_examples=200, deadline=None)
    def test_gcd_divides_both(self, p, q):
        assume(not p.is_zero() and not q.is_zero())
        g = laurent_gcd([p, q])
        assert g.divides(p)
        assert g.divides(q)
