"""Triangle group D(3,3,3) = <a, b | a^3, b^3, (ab)^3>: a singular point of R_2."""
from __future__ import annotations

from repvar.catalog.base import Assertion, CatalogEntry
from repvar.cohomology_engine import cocycle_space, cohomology_dims, tangent_gap_report
from repvar.cyclotomic import CyclotomicNumber, root_of_unity
from repvar.deformation_engine import TruncatedDeformation, obstruction_step
from repvar.irreducibility import is_invariant, is_irreducible
from repvar.linalg import Matrix
from repvar.presentation_parser import parse_presentation, parse_word_list
from repvar.representation import Representation, character_of, evaluate, make_rep
from repvar.words import Presentation

FIELD_ORDER = 12

DYCK_333 = parse_presentation("gens a, b; rel a^3, b^3, (a b)^3;")

TRACE_WORDS = parse_word_list("a, b, a b", DYCK_333)


def _a() -> Matrix:
    w = root_of_unity(3, 1, FIELD_ORDER)
    return Matrix.diagonal([w, w.conjugate()], FIELD_ORDER)


def dyck333_rho0() -> Representation:
    """a, b -> diag(w, w^-1)."""
    a = _a()
    return make_rep(DYCK_333, [a, a], order=FIELD_ORDER)


def dyck333_cocycle(index: int) -> list[Matrix]:
    """z_1: b -> E12, z_2: b -> E21; both vanish on a."""
    zero = Matrix.zeros(2, 2, FIELD_ORDER)
    unit = Matrix.unit(2, 0, 1, FIELD_ORDER) if index == 1 else Matrix.unit(2, 1, 0, FIELD_ORDER)
    return [zero, unit]


def dyck333_family(index: int, t=1) -> Representation:
    """rho_i(t)(g) = (I + t z_i(g)) rho_0(g)."""
    a = _a()
    shear = Matrix.identity(2, FIELD_ORDER) + dyck333_cocycle(index)[1] * t
    return make_rep(DYCK_333, [a, shear @ a], order=FIELD_ORDER)


def order_three_by_trace(m: Matrix) -> bool:
    """For A in SL(2): A^3 = I with A != I exactly when tr A = -1."""
    order_three = (m ** 3).is_identity() and not m.is_identity()
    return order_three == (m.trace() + CyclotomicNumber.one(m.order)).is_zero()


def _sample_matrices() -> list[Matrix]:
    reps = [dyck333_rho0(), dyck333_family(1), dyck333_family(2), dyck333_family(1, 3)]
    samples = [evaluate(r, w) for r in reps for w in TRACE_WORDS]
    samples.append(Matrix.identity(2, FIELD_ORDER))
    samples.append(Matrix.identity(2, FIELD_ORDER) + Matrix.unit(2, 0, 1, FIELD_ORDER))
    samples.append(Matrix.identity(2, FIELD_ORDER) * -1)
    return samples


def _second_order(cochain: list[Matrix]) -> bool:
    return obstruction_step(TruncatedDeformation(dyck333_rho0(), [cochain])).extendable


class Dyck333Entry(CatalogEntry):
    name = "dyck333"
    description = "Triangle group D(3,3,3): Z^1 strictly larger than the tangent space of the variety."
    field_order = FIELD_ORDER

    def presentation(self, params: dict) -> Presentation:
        return DYCK_333

    def representations(self, params: dict) -> dict:
        return {"rho0": dyck333_rho0, "rho_i": dyck333_family}

    def assertions(self, params: dict) -> list[Assertion]:
        rho0 = dyck333_rho0()
        z1, z2 = dyck333_cocycle(1), dyck333_cocycle(2)
        both = [x + y for x, y in zip(z1, z2)]
        one, zero = CyclotomicNumber.one(FIELD_ORDER), CyclotomicNumber.zero(FIELD_ORDER)
        e1, e2 = (one, zero), (zero, one)
        return [
            Assertion("h0", 1, lambda: cohomology_dims(rho0).h0, "stabiliser of rho_0 is the diagonal torus"),
            Assertion("dim Z^1", 4, lambda: cohomology_dims(rho0).z1, "x11 = y11 = 0"),
            Assertion("h1", 2, lambda: cohomology_dims(rho0).h1, "B^1 spanned by E12 and E21 on a and b"),
            Assertion("relator Jacobian rank", 2, lambda: 6 - cocycle_space(rho0).dimension,
                      "(ab)^3 gives no further condition"),
            Assertion("z_1 is a cocycle", True, lambda: cocycle_space(rho0).contains(z1), "Fox calculus"),
            Assertion("z_2 is a cocycle", True, lambda: cocycle_space(rho0).contains(z2), "Fox calculus"),
            Assertion("z_1 extends to order 2", True, lambda: _second_order(z1), "rho_1(t) integrates z_1"),
            Assertion("z_2 extends to order 2", True, lambda: _second_order(z2), "rho_2(t) integrates z_2"),
            Assertion("z_1 + z_2 obstructed", False, lambda: _second_order(both),
                      "c1 z1 + c2 z2 integrable iff c1 c2 = 0"),
            Assertion("tangent gap against local dimension 3", 1,
                      lambda: tangent_gap_report(rho0, 3).gap, "slice of two axes plus a 2-dimensional orbit"),
            Assertion("rho_1(1) reducible", False, lambda: is_irreducible(dyck333_family(1)).irreducible,
                      "every representation of D(3,3,3) is reducible"),
            Assertion("rho_1(1) fixes e1", True, lambda: is_invariant(dyck333_family(1), [e1]), "upper triangular"),
            Assertion("rho_2(1) fixes e2", True, lambda: is_invariant(dyck333_family(2), [e2]), "lower triangular"),
            Assertion("traces (-1, -1, -1)", ("-1", "-1", "-1"),
                      lambda: tuple(str(evaluate(dyck333_family(1), w).trace()) for w in TRACE_WORDS),
                      "triangular case of the classification"),
            Assertion("rho_1 and rho_2 share the character of rho_0", True,
                      lambda: character_of(dyck333_family(1), TRACE_WORDS).agrees_with(character_of(rho0, TRACE_WORDS))
                      and character_of(dyck333_family(2), TRACE_WORDS).agrees_with(character_of(rho0, TRACE_WORDS)),
                      "orbit of rho_0 lies in both closures"),
            Assertion("A^3 = I, A != I iff tr A = -1", True,
                      lambda: all(order_three_by_trace(m) for m in _sample_matrices()),
                      "order-three elements of SL(2) by trace"),
        ]
