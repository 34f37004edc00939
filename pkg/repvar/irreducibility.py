"""Irreducibility by Burnside's theorem, with invariant-subspace witnesses.

A representation of rank n is irreducible over C exactly when the images of
words span all of M_n. The span is grown breadth-first over word length; the
verdict is exact. When the span is proper, a witness search looks for an
invariant subspace defined over the context field, starting from standard
basis vectors and from eigenvectors of elements of the generated algebra.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import sympy as sp

from repvar.cyclotomic import CyclotomicNumber, as_field, field_degree, root_of_unity
from repvar.laurent import LaurentPoly
from repvar.linalg import Matrix, Vector, characteristic_polynomial, kernel_basis, span_basis
from repvar.representation import Representation
from repvar.words import Word

logger = logging.getLogger(__name__)

# Word length cap is BURNSIDE_LENGTH_FACTOR * n^2.
BURNSIDE_LENGTH_FACTOR = 2

_X = sp.Symbol("x")


@dataclass
class IrreducibilityVerdict:
    irreducible: bool
    algebra_dimension: int
    target_dimension: int
    spanning_words: list[Word] = field(default_factory=list)
    invariant_subspace: list[Vector] | None = None
    witness_found: bool = False
    eigenvalues_split: bool = True

    def to_json(self, presentation=None) -> dict:
        fmt = presentation.format_word if presentation is not None else str
        return {
            "irreducible": self.irreducible,
            "algebra_dimension": self.algebra_dimension,
            "target_dimension": self.target_dimension,
            "spanning_words": [fmt(w) for w in self.spanning_words],
            "invariant_subspace": None if self.invariant_subspace is None
            else [[str(c) for c in v] for v in self.invariant_subspace],
            "witness_found": self.witness_found,
            "eigenvalues_split": self.eigenvalues_split,
        }


class _EchelonSpan:
    """Incrementally maintained semi-echelon basis."""

    def __init__(self) -> None:
        self.rows: list[tuple[int, list[CyclotomicNumber]]] = []

    def __len__(self) -> int:
        return len(self.rows)

    def add(self, vector: Sequence[CyclotomicNumber]) -> bool:
        v = list(vector)
        for pivot, row in self.rows:
            c = v[pivot]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        pivot = next((i for i, c in enumerate(v) if c), None)
        if pivot is None:
            return False
        inv = v[pivot].inverse()
        self.rows.append((pivot, [c * inv for c in v]))
        return True


def algebra_span(r: Representation) -> tuple[list[Word], list[Matrix]]:
    """Words whose images form a basis of the algebra generated by the image."""
    n = r.rank
    cap = BURNSIDE_LENGTH_FACTOR * n * n
    span = _EchelonSpan()
    identity = r.identity()
    span.add(identity.vectorize())
    words = [Word()]
    matrices = [identity]
    frontier = [(Word(), identity)]
    letters = [(g, s) for g in range(r.presentation.generator_count) for s in (1, -1)]
    length = 0
    while frontier and len(span) < n * n and length < cap:
        length += 1
        fresh = []
        for w, m in frontier:
            for gen, sign in letters:
                extended = w * Word(((gen, sign),))
                if len(extended) != length:
                    continue
                image = m @ r.letter_image(gen, sign)
                if span.add(image.vectorize()):
                    words.append(extended)
                    matrices.append(image)
                    fresh.append((extended, image))
                    if len(span) == n * n:
                        break
            if len(span) == n * n:
                break
        logger.debug("word length %d: span dimension %d", length, len(span))
        frontier = fresh
    return words, matrices


# ---------------------------------------------------------------------------
# Eigenvalues inside the context field
# ---------------------------------------------------------------------------

def _candidate_roots(poly: LaurentPoly) -> Iterable[CyclotomicNumber]:
    order = poly.order
    seen: list[CyclotomicNumber] = []
    for k in range(order):
        z = root_of_unity(order, k, order)
        for c in (z, -z):
            if c not in seen:
                seen.append(c)
                yield c
    if all(c.is_rational() for c in poly.coeffs):
        coeffs = [c.to_fraction() for c in reversed(poly.coeffs)]
        sym = sp.Poly([sp.Rational(q.numerator, q.denominator) for q in coeffs], _X, domain=sp.QQ)
        for root in sym.ground_roots():
            if root == 0:
                continue
            value = as_field(Fraction(int(root.p), int(root.q)), order)
            if value not in seen:
                seen.append(value)
                yield value


@lru_cache(maxsize=None)
def _number_field(order: int):
    """sympy's Q<zeta_order>; its generator is zeta itself, with minimal polynomial Phi_order."""
    return sp.QQ.algebraic_field(sp.exp(2 * sp.pi * sp.I / order))


def _to_anp(value: CyclotomicNumber, domain):
    rep = [sp.QQ(c.numerator, c.denominator) for c in reversed(value.coeffs)]
    while rep and not rep[0]:
        rep.pop(0)
    return domain.new(rep)


def _from_anp(element, order: int) -> CyclotomicNumber:
    coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(element.to_list())]
    return CyclotomicNumber(order, coeffs or [0])


def _extension_roots(poly: LaurentPoly) -> list[CyclotomicNumber]:
    """Roots in Q(zeta_order) read off the linear factors of poly over that field."""
    order = poly.order
    if field_degree(order) == 1:
        return []
    domain = _number_field(order)
    coeffs = [_to_anp(c, domain) for c in reversed(poly.coeffs)]
    sym = sp.Poly.from_list(coeffs, _X, domain=domain)
    _, factors = sym.factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() != 1:
            continue
        lead, const = factor.rep.to_list()
        roots.append(_from_anp(domain.quo(-const, lead), order))
    logger.debug("factored a degree %d polynomial over Q(zeta_%d): %d linear factors",
                 poly.span(), order, len(roots))
    return roots


def _strip_root(poly: LaurentPoly, root: CyclotomicNumber) -> tuple[LaurentPoly, int]:
    factor = LaurentPoly(0, [-root, CyclotomicNumber.one(poly.order)], poly.order)
    multiplicity = 0
    while poly.span() > 0:
        quotient, rest = poly.divmod(factor)
        if not rest.is_zero():
            break
        poly = quotient
        multiplicity += 1
    return poly, multiplicity


def field_eigenvalues(m: Matrix) -> tuple[list[tuple[CyclotomicNumber, int]], bool]:
    """Eigenvalues of m found in Q(zeta_order) with algebraic multiplicities.

    Roots of unity and rational roots are tried first; whatever is left of the
    characteristic polynomial is factored over the field. The flag is True when
    the eigenvalues account for the whole characteristic polynomial.
    """
    poly = characteristic_polynomial(m)
    found: list[tuple[CyclotomicNumber, int]] = []
    total = 0
    remaining = poly
    if poly.low > 0:
        found.append((CyclotomicNumber.zero(m.order), poly.low))
        total = poly.low
        remaining = poly.shift(-poly.low)
    for root in _candidate_roots(remaining):
        if total == m.rows:
            break
        if not remaining.evaluate(root).is_zero():
            continue
        remaining, multiplicity = _strip_root(remaining, root)
        if multiplicity:
            found.append((root, multiplicity))
            total += multiplicity
    if total < m.rows and remaining.span() > 0:
        for root in _extension_roots(remaining):
            remaining, multiplicity = _strip_root(remaining, root)
            if multiplicity:
                found.append((root, multiplicity))
                total += multiplicity
    return found, total == m.rows


def eigenvectors(m: Matrix) -> tuple[list[Vector], bool]:
    vectors: list[Vector] = []
    values, split = field_eigenvalues(m)
    identity = Matrix.identity(m.rows, m.order)
    for value, _ in values:
        vectors.extend(kernel_basis(m - identity * value))
    return vectors, split


# ---------------------------------------------------------------------------
# Witness search
# ---------------------------------------------------------------------------

def _cyclic_subspace(algebra: Sequence[Matrix], v: Vector) -> list[Vector]:
    order = algebra[0].order
    return span_basis([b.apply(v) for b in algebra], len(v), order)


def _annihilator(vectors: list[Vector], order: int) -> list[Vector]:
    return kernel_basis(Matrix.from_rows([list(v) for v in vectors], order))


def find_invariant_subspace(algebra: Sequence[Matrix], n: int) -> tuple[list[Vector] | None, bool]:
    """A proper nonzero subspace invariant under every matrix in ``algebra``."""
    order = algebra[0].order
    zero = CyclotomicNumber.zero(order)
    one = CyclotomicNumber.one(order)
    standard = [tuple(one if i == j else zero for i in range(n)) for j in range(n)]
    split = True

    def proper(space: list[Vector]) -> bool:
        return 0 < len(space) < n

    for v in standard:
        space = _cyclic_subspace(algebra, v)
        if proper(space):
            return space, split
    transposed = [b.transpose() for b in algebra]
    for v in standard:
        space = _cyclic_subspace(transposed, v)
        if proper(space):
            return _annihilator(space, order), split
    for b in algebra:
        for mats, dual in ((algebra, False), (transposed, True)):
            source = b.transpose() if dual else b
            vectors, b_split = eigenvectors(source)
            split = split and b_split
            for v in vectors:
                space = _cyclic_subspace(mats, v)
                if proper(space):
                    return (_annihilator(space, order) if dual else space), split
    return None, split


def is_irreducible(r: Representation) -> IrreducibilityVerdict:
    n = r.rank
    words, matrices = algebra_span(r)
    dimension = len(words)
    verdict = IrreducibilityVerdict(
        irreducible=dimension == n * n,
        algebra_dimension=dimension,
        target_dimension=n * n,
        spanning_words=words,
    )
    if verdict.irreducible:
        verdict.witness_found = True
        logger.info("irreducible: %d words span M_%d", dimension, n)
        return verdict
    subspace, split = find_invariant_subspace(matrices, n)
    verdict.invariant_subspace = subspace
    verdict.witness_found = subspace is not None
    verdict.eigenvalues_split = split
    if subspace is None:
        logger.warning(
            "algebra has dimension %d < %d but no invariant subspace over Q(zeta_%d) was found",
            dimension, n * n, r.order,
        )
    else:
        logger.info("reducible: invariant subspace of dimension %d", len(subspace))
    return verdict


def is_invariant(r: Representation, subspace: Sequence[Vector]) -> bool:
    """Every generator image maps the span of ``subspace`` into itself."""
    if not subspace:
        return True
    n = r.rank
    base = span_basis(list(subspace), n, r.order)
    for m in r.images:
        images = [m.apply(v) for v in base]
        if len(span_basis(base + images, n, r.order)) != len(base):
            return False
    return True
