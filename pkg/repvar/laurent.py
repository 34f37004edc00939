"""Laurent polynomials in t over a cyclotomic field."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, Sequence

from repvar.cyclotomic import CyclotomicNumber, Scalar, as_field, common_order
from repvar.errors import DivisionByZero, EvalAtZero, InputError

logger = logging.getLogger(__name__)


class NotDivisible(InputError):
    pass


class LaurentPoly:
    """sum_i coeffs[i] * t**(low + i); immutable.

    ``coeffs`` is trimmed so the first and last entries are nonzero; the zero
    polynomial has no coefficients and ``low == 0``.
    """

    __slots__ = ("low", "coeffs", "order")

    def __init__(self, low: int, coeffs: Sequence[CyclotomicNumber], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("order is required for an empty coefficient list")
            order = coeffs[0].order
        coeffs = [as_field(c, order) for c in coeffs]
        start = 0
        while start < len(coeffs) and coeffs[start].is_zero():
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1].is_zero():
            end -= 1
        self.order = order
        self.coeffs = tuple(coeffs[start:end])
        self.low = low + start if self.coeffs else 0

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> LaurentPoly:
        return cls(0, (), order)

    @classmethod
    def constant(cls, value: CyclotomicNumber) -> LaurentPoly:
        return cls(0, (value,), value.order)

    @classmethod
    def one(cls, order: int) -> LaurentPoly:
        return cls.constant(CyclotomicNumber.one(order))

    @classmethod
    def monomial(cls, value: CyclotomicNumber, exponent: int) -> LaurentPoly:
        return cls(exponent, (value,), value.order)

    @classmethod
    def t_power(cls, order: int, exponent: int) -> LaurentPoly:
        return cls.monomial(CyclotomicNumber.one(order), exponent)

    # -- structure --------------------------------------------------------

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.is_zero() or (self.low == 0 and len(self.coeffs) == 1)

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def constant_term(self) -> CyclotomicNumber:
        return self.coefficient(0)

    def coefficient(self, exponent: int) -> CyclotomicNumber:
        index = exponent - self.low
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return CyclotomicNumber.zero(self.order)

    def leading(self) -> CyclotomicNumber:
        return self.coeffs[-1]

    def span(self) -> int:
        """Width high - low, the degree of the normalised representative."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    def terms(self) -> dict[int, CyclotomicNumber]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other) -> tuple[LaurentPoly, LaurentPoly] | None:
        if isinstance(other, LaurentPoly):
            a, b = self, other
        elif isinstance(other, CyclotomicNumber):
            a, b = self, LaurentPoly.constant(other)
        elif isinstance(other, (int, Fraction)):
            return self, LaurentPoly.constant(as_field(other, self.order))
        else:
            return None
        if a.order != b.order:
            order = common_order(a.order, b.order)
            a, b = a.embed(order), b.embed(order)
        return a, b

    def embed(self, order: int) -> LaurentPoly:
        if order == self.order:
            return self
        return LaurentPoly(self.low, [c.embed(order) for c in self.coeffs], order)

    def __add__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        low = min(a.low, b.low)
        high = max(a.high, b.high)
        zero = CyclotomicNumber.zero(a.order)
        coeffs = [zero] * (high - low + 1)
        for i, c in enumerate(a.coeffs):
            coeffs[a.low - low + i] = coeffs[a.low - low + i] + c
        for i, c in enumerate(b.coeffs):
            coeffs[b.low - low + i] = coeffs[b.low - low + i] + c
        return LaurentPoly(low, coeffs, a.order)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.low, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.is_zero() or b.is_zero():
            return LaurentPoly.zero(a.order)
        zero = CyclotomicNumber.zero(a.order)
        coeffs = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            for j, y in enumerate(b.coeffs):
                coeffs[i + j] = coeffs[i + j] + x * y
        return LaurentPoly(a.low + b.low, coeffs, a.order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_unit():
                raise InputError("only monomials have Laurent inverses")
            return self.monomial_inverse() ** (-exponent)
        result = LaurentPoly.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def monomial_inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise InputError(f"{self} is not a unit of the Laurent ring")
        return LaurentPoly(-self.low, (self.coeffs[0].inverse(),), self.order)

    def scale(self, value: Scalar) -> LaurentPoly:
        return LaurentPoly(self.low, [c * value for c in self.coeffs], self.order)

    def shift(self, exponent: int) -> LaurentPoly:
        return LaurentPoly(self.low + exponent, self.coeffs, self.order)

    # -- calculus ---------------------------------------------------------

    def evaluate(self, x: Scalar) -> CyclotomicNumber:
        x = as_field(x, self.order) if not isinstance(x, CyclotomicNumber) else x
        if x.is_zero():
            raise EvalAtZero("Laurent polynomials are not evaluated at 0")
        result = CyclotomicNumber.zero(common_order(self.order, x.order))
        for c in reversed(self.coeffs):
            result = result * x + c
        return result * x ** self.low

    def derivative(self) -> LaurentPoly:
        if self.is_zero():
            return self
        return LaurentPoly(
            self.low - 1,
            [c * (self.low + i) for i, c in enumerate(self.coeffs)],
            self.order,
        )

    def substitute_inverse(self) -> LaurentPoly:
        """p(t^-1)."""
        if self.is_zero():
            return self
        return LaurentPoly(-self.high, tuple(reversed(self.coeffs)), self.order)

    def conjugate_coefficients(self) -> LaurentPoly:
        return LaurentPoly(self.low, [c.conjugate() for c in self.coeffs], self.order)

    # -- associate classes ------------------------------------------------

    def normalize(self) -> LaurentPoly:
        """Associate representative: lowest exponent 0, leading coefficient 1."""
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return LaurentPoly(0, [c * inv for c in self.coeffs], self.order)

    def divmod(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Euclidean division of the normalised-exponent polynomials in K[t]."""
        if divisor.is_zero():
            raise DivisionByZero("polynomial division by zero")
        a = self.shift(-self.low) if not self.is_zero() else self
        b = divisor.shift(-divisor.low)
        remainder = list(a.coeffs)
        order = common_order(self.order, divisor.order)
        zero = CyclotomicNumber.zero(order)
        if len(remainder) < len(b.coeffs):
            return LaurentPoly.zero(order), a.embed(order)
        quotient = [zero] * (len(remainder) - len(b.coeffs) + 1)
        lead_inv = b.leading().inverse()
        for k in range(len(quotient) - 1, -1, -1):
            c = remainder[k + len(b.coeffs) - 1] * lead_inv
            quotient[k] = c
            if c:
                for j, bc in enumerate(b.coeffs):
                    remainder[k + j] = remainder[k + j] - c * bc
        return LaurentPoly(0, quotient, order), LaurentPoly(0, remainder[: len(b.coeffs) - 1] or [zero], order)

    def exact_divide(self, divisor: LaurentPoly) -> LaurentPoly:
        """self / divisor in K[t, t^-1]; raises NotDivisible when it is not exact."""
        if divisor.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero():
            return self
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise NotDivisible(f"{divisor} does not divide {self}")
        return quotient.shift(self.low - divisor.low)

    def divides(self, other: LaurentPoly) -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    # -- comparison and formatting ----------------------------------------

    def __eq__(self, other) -> bool:
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.low == b.low and a.coeffs == b.coeffs

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for exponent in range(self.high, self.low - 1, -1):
            c = self.coefficient(exponent)
            if c.is_zero():
                continue
            if exponent == 0:
                var = ""
            elif exponent == 1:
                var = "t"
            else:
                var = f"t^{exponent}"
            negative = c.is_rational() and c.to_fraction() < 0
            magnitude = -c if negative else c
            if not var:
                body = str(magnitude) if magnitude.is_rational() else f"({magnitude})"
            elif magnitude.is_one():
                body = var
            elif magnitude.is_rational():
                body = f"{magnitude}*{var}"
            else:
                body = f"({magnitude})*{var}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> dict[str, str]:
        """Exponent -> coefficient string map."""
        return {str(k): str(v) for k, v in self.terms().items()}


def associated(p: LaurentPoly, q: LaurentPoly) -> bool:
    """p and q differ by a unit c*t^k."""
    return p.normalize() == q.normalize()


def laurent_gcd(polys: Iterable[LaurentPoly], order: int | None = None) -> LaurentPoly:
    """Normalised gcd over the PID K[t, t^-1]; zero for an empty or all-zero list."""
    result: LaurentPoly | None = None
    for p in polys:
        if order is None:
            order = p.order
        if p.is_zero():
            continue
        if result is None:
            result = p.normalize()
            continue
        a, b = result, p.normalize()
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        result = a.normalize()
        if result.span() == 0:
            break
    if result is None:
        return LaurentPoly.zero(order if order is not None else 1)
    return result
