"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) with
rational coordinates, reduced modulo the N-th cyclotomic polynomial.
"""
from __future__ import annotations

import logging
import os
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Union

import sympy as sp

from repvar.errors import DivisionByZero, FieldMismatch, UnrepresentableInput

logger = logging.getLogger(__name__)

# Context field used when nothing else pins the order down.
DEFAULT_ORDER = int(os.environ.get("REPVAR_FIELD_ORDER", "24"))

_X = sp.Symbol("x")

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_modulus(order: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_order, constant term first (monic)."""
    if order < 1:
        raise ValueError(f"field order must be >= 1, got {order}")
    poly = sp.Poly(sp.cyclotomic_poly(order, _X), _X)
    return tuple(Fraction(int(c)) for c in reversed(poly.all_coeffs()))


def field_degree(order: int) -> int:
    return int(sp.totient(order))


@lru_cache(maxsize=None)
def _power_traces(order: int) -> tuple[Fraction, ...]:
    # Normalised trace of zeta^k is the Ramanujan sum c_N(k) divided by phi(N).
    degree = field_degree(order)
    traces = []
    for k in range(degree):
        g = gcd(k, order)
        m = order // g
        ramanujan = int(sp.mobius(m)) * degree // int(sp.totient(m))
        traces.append(Fraction(ramanujan, degree))
    return tuple(traces)


def _reduce(coeffs: list[Fraction], order: int) -> tuple[Fraction, ...]:
    modulus = cyclotomic_modulus(order)
    degree = len(modulus) - 1
    work = list(coeffs)
    for k in range(len(work) - 1, degree - 1, -1):
        c = work[k]
        if c:
            shift = k - degree
            for i in range(degree):
                work[shift + i] -= c * modulus[i]
            work[k] = Fraction(0)
    work = work[:degree]
    if len(work) < degree:
        work.extend([Fraction(0)] * (degree - len(work)))
    return tuple(work)


def common_order(a: int, b: int) -> int:
    """The larger of two field orders when one divides the other."""
    if a == b:
        return a
    if b % a == 0:
        return b
    if a % b == 0:
        return a
    raise FieldMismatch(f"cannot combine Q(zeta_{a}) and Q(zeta_{b})")


class CyclotomicNumber:
    """An element of Q(zeta_order). Immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs, *, reduced: bool = False):
        self.order = order
        if reduced:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = _reduce([Fraction(c) for c in coeffs], order)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rational(cls, order: int, value: Rational) -> CyclotomicNumber:
        degree = field_degree(order)
        coeffs = [Fraction(0)] * degree
        coeffs[0] = Fraction(value)
        return cls(order, coeffs, reduced=True)

    @classmethod
    def zero(cls, order: int) -> CyclotomicNumber:
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> CyclotomicNumber:
        return cls.from_rational(order, 1)

    # -- coercion ---------------------------------------------------------

    def embed(self, order: int) -> CyclotomicNumber:
        """Image under Q(zeta_self.order) -> Q(zeta_order), zeta_m -> zeta_N^(N/m)."""
        if order == self.order:
            return self
        if order % self.order:
            raise FieldMismatch(
                f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})"
            )
        step = order // self.order
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return CyclotomicNumber(order, poly)

    def _lift(self, other) -> tuple[CyclotomicNumber, CyclotomicNumber] | None:
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self, other
            order = common_order(self.order, other.order)
            return self.embed(order), other.embed(order)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber.from_rational(self.order, other)
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)], reduced=True)

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, [-c for c in self.coeffs], reduced=True)

    def __sub__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)], reduced=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [c * other for c in self.coeffs], reduced=True)
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if b.is_rational():
            return a * b.coeffs[0]
        if a.is_rational():
            return b * a.coeffs[0]
        product = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    product[i + j] += x * y
        return CyclotomicNumber(a.order, product)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber.from_rational(self.order, 1 / self.coeffs[0])
        # Extended Euclid against Phi_N.
        num = sp.Poly.from_list(
            [sp.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
            _X, domain=sp.QQ,
        )
        mod = sp.Poly.from_list(
            [int(c) for c in reversed(cyclotomic_modulus(self.order))], _X, domain=sp.QQ,
        )
        inv = num.invert(mod)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return CyclotomicNumber(self.order, coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, exponent: int) -> CyclotomicNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = CyclotomicNumber.one(self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self) -> CyclotomicNumber:
        """Complex conjugation, zeta -> zeta^-1."""
        poly = [Fraction(0)] * self.order
        for i, c in enumerate(self.coeffs):
            poly[(-i) % self.order] += c
        return CyclotomicNumber(self.order, poly)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise UnrepresentableInput(f"{self} is not rational")
        return self.coeffs[0]

    def normalized_trace(self) -> Fraction:
        """Trace to Q divided by the field degree; independent of the ambient order."""
        return sum((c * t for c, t in zip(self.coeffs, _power_traces(self.order))), Fraction(0))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            pair = self._lift(other)
        except FieldMismatch:
            # Both embed in Q(zeta_lcm); hash agrees with this comparison.
            order = lcm(self.order, other.order)
            return self.embed(order).coeffs == other.embed(order).coeffs
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        return hash(self.normalized_trace())

    # -- formatting -------------------------------------------------------

    def __str__(self) -> str:
        terms: list[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                root = f"zeta({self.order})" + (f"^{k}" if k > 1 else "")
                body = root if abs(c) == 1 else f"{abs(c)}*{root}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.order}, {self})"


Scalar = Union[int, Fraction, CyclotomicNumber]


def cyc_make(order: int, exponent: int) -> CyclotomicNumber:
    """zeta_order ** exponent in the power basis of Q(zeta_order)."""
    if order < 1:
        raise ValueError(f"field order must be >= 1, got {order}")
    poly = [Fraction(0)] * order
    poly[exponent % order] = Fraction(1)
    return CyclotomicNumber(order, poly)


def root_of_unity(order: int, exponent: int, field_order: int) -> CyclotomicNumber:
    """zeta_order ** exponent embedded in Q(zeta_field_order)."""
    if field_order % order:
        raise UnrepresentableInput(
            f"zeta({order}) does not lie in Q(zeta_{field_order})"
        )
    return cyc_make(field_order, (field_order // order) * exponent)


def as_field(value: Scalar, order: int) -> CyclotomicNumber:
    """Coerce a rational or a field element of a dividing order into Q(zeta_order)."""
    if isinstance(value, CyclotomicNumber):
        return value.embed(order)
    return CyclotomicNumber.from_rational(order, value)


# ---------------------------------------------------------------------------
# Square roots of rationals (quadratic Gauss sums)
# ---------------------------------------------------------------------------

def _sqrt_prime(p: int, order: int) -> CyclotomicNumber:
    if p == 2:
        return root_of_unity(8, 1, order) + root_of_unity(8, -1, order)
    needed = p if p % 4 == 1 else 4 * p
    if order % needed:
        raise UnrepresentableInput(
            f"sqrt({p}) requires zeta({needed}), not available in Q(zeta_{order})"
        )
    gauss = CyclotomicNumber.zero(order)
    for a in range(1, p):
        gauss = gauss + root_of_unity(p, a, order) * int(sp.legendre_symbol(a, p))
    if p % 4 == 1:
        return gauss
    # gauss = i*sqrt(p) here
    return -root_of_unity(4, 1, order) * gauss


def sqrt_rational(value: Rational, order: int = DEFAULT_ORDER) -> CyclotomicNumber:
    """Principal square root of a rational inside Q(zeta_order)."""
    q = Fraction(value)
    if q == 0:
        return CyclotomicNumber.zero(order)
    radicand = q.numerator * q.denominator
    result = CyclotomicNumber.from_rational(order, Fraction(1, q.denominator))
    if radicand < 0:
        if order % 4:
            raise UnrepresentableInput(f"sqrt({q}) requires i, not in Q(zeta_{order})")
        result = result * root_of_unity(4, 1, order)
        radicand = -radicand
    square = 1
    for p, e in sorted(sp.factorint(radicand).items()):
        square *= p ** (e // 2)
        if e % 2:
            result = result * _sqrt_prime(int(p), order)
    return result * square
