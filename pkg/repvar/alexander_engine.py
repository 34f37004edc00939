"""Twisted Alexander polynomials and the deformation conditions they control.

The twisted Fox matrix F of a module V has block (j, i) equal to the image
of dr_j/dx_i under g -> V(g) t^phi(g). With d1 = [V(x_i) t^phi(x_i) - I]_i of
rank s over K(t), the first homology of the infinite cyclic cover is
presented by F modulo a free summand of rank s, so

    Delta_1 = gcd of the (g*d - s)-minors of F,
    Delta_0 = gcd of the d-minors of d1,

both up to units c*t^k. The classical recipe that deletes one generator
column block is kept as a cross-check: det(F without block j) / det(B_j)
must agree with Delta_1 / Delta_0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from repvar.cohomology_engine import check_infinitesimal_regularity
from repvar.constructions import trivial_representation
from repvar.cyclotomic import DEFAULT_ORDER, CyclotomicNumber, Scalar, as_field, common_order
from repvar.errors import EvalAtZero, MissingAbelianization, NoDeletableColumn, NotIrreducible, PresentationMismatch
from repvar.irreducibility import is_irreducible
from repvar.laurent import LaurentPoly, associated, laurent_gcd
from repvar.linalg import LaurentMatrix, Matrix, laurent_vstack, minors_gcd
from repvar.modules import HomModule, ModuleSpec, RepresentationModule, same_module_presentation
from repvar.representation import Representation
from repvar.words import Presentation, Word, fox_images

logger = logging.getLogger(__name__)


@dataclass
class TwistedFoxMatrix:
    module: ModuleSpec
    matrix: LaurentMatrix
    boundary: LaurentMatrix

    @property
    def module_dim(self) -> int:
        return self.module.dimension

    def block(self, relator: int, generator: int) -> LaurentMatrix:
        d = self.module_dim
        return self.matrix.submatrix(
            range(relator * d, (relator + 1) * d), range(generator * d, (generator + 1) * d)
        )

    def generator_block(self, generator: int) -> LaurentMatrix:
        """B_i = V(x_i) t^phi(x_i) - I."""
        d = self.module_dim
        return self.boundary.submatrix(range(generator * d, (generator + 1) * d), range(d))

    def delete_column_block(self, generator: int) -> LaurentMatrix:
        d = self.module_dim
        keep = [c for c in range(self.matrix.cols) if not generator * d <= c < (generator + 1) * d]
        return self.matrix.submatrix(range(self.matrix.rows), keep)

    def specialize(self, value: Scalar) -> Matrix:
        return self.matrix.specialize(value)


def _twisted_letter(module: ModuleSpec):
    p = module.presentation

    def letter(gen: int, sign: int) -> LaurentMatrix:
        power = sign * p.phi(Word.generator(gen))
        return LaurentMatrix.from_matrix(module.letter_action(gen, sign), power)

    return letter


def twisted_fox_matrix(r: Representation, module: ModuleSpec | None = None) -> TwistedFoxMatrix:
    """Fox matrix of the presentation under V (x) t^phi; V defaults to r itself."""
    if module is None:
        module = RepresentationModule(r)
    else:
        same_module_presentation(module, r)
    return twisted_fox_matrix_of(module)


def twisted_fox_matrix_of(module: ModuleSpec) -> TwistedFoxMatrix:
    p = module.presentation
    if p.abelianization is None:
        raise MissingAbelianization("twisted Fox matrices need the abelianization phi")
    d = module.dimension
    g = p.generator_count
    order = module.order
    letter = _twisted_letter(module)
    identity = LaurentMatrix.identity(d, order)
    zero_block = LaurentMatrix.zeros(d, d, order)
    entries: list[LaurentPoly] = []
    for relator in p.relators:
        blocks = [zero_block if b is None else b for b in fox_images(relator, g, letter, identity)]
        for i in range(d):
            entries.extend(b[i, j] for b in blocks for j in range(d))
    matrix = LaurentMatrix(p.relator_count * d, g * d, entries, order)
    if g:
        boundary = laurent_vstack([letter(i, 1) - identity for i in range(g)])
    else:
        boundary = LaurentMatrix.zeros(0, d, order)
    logger.debug("twisted Fox matrix %dx%d for %s", matrix.rows, matrix.cols, module.describe())
    return TwistedFoxMatrix(module, matrix, boundary)


@dataclass
class AlexanderData:
    delta0: LaurentPoly
    delta1: LaurentPoly
    column_deleted: int
    wada_numerator: LaurentPoly | None = None
    wada_denominator: LaurentPoly | None = None
    wada_consistent: bool | None = None

    def to_dict(self) -> dict:
        return {
            "delta0": self.delta0.to_json(),
            "delta1": self.delta1.to_json(),
            "delta0_text": str(self.delta0),
            "delta1_text": str(self.delta1),
            "column_deleted": self.column_deleted,
            "wada_consistent": self.wada_consistent,
        }


def deletable_column(fox: TwistedFoxMatrix) -> int:
    """Smallest generator whose block B_i has nonzero determinant."""
    for i in range(fox.module.presentation.generator_count):
        if not fox.generator_block(i).determinant().is_zero():
            return i
    raise NoDeletableColumn("every generator block V(x) t^phi(x) - I is singular")


def wada_quotient(fox: TwistedFoxMatrix, column: int) -> tuple[LaurentPoly, LaurentPoly]:
    """det(F without block ``column``) / det(B_column) in lowest terms (deficiency one only)."""
    reduced = fox.delete_column_block(column)
    if reduced.rows != reduced.cols:
        raise PresentationMismatch(
            f"Wada quotient needs a square reduced matrix, got {reduced.rows}x{reduced.cols}"
        )
    numerator = reduced.determinant()
    denominator = fox.generator_block(column).determinant()
    if denominator.is_zero():
        raise NoDeletableColumn(f"generator block {column} is singular")
    if numerator.is_zero():
        return numerator, LaurentPoly.one(denominator.order)
    common = laurent_gcd([numerator, denominator])
    return numerator.exact_divide(common), denominator.exact_divide(common)


def alexander_polynomials_of(fox: TwistedFoxMatrix) -> AlexanderData:
    module = fox.module
    d = module.dimension
    g = module.presentation.generator_count
    if g == 0:
        raise NoDeletableColumn("presentation has no generators")
    column = deletable_column(fox)
    s = fox.boundary.rank()
    size = g * d - s
    if size > fox.matrix.rows:
        delta1 = LaurentPoly.zero(module.order)
    else:
        delta1 = minors_gcd(fox.matrix, size)
    delta0 = minors_gcd(fox.boundary, d)
    data = AlexanderData(delta0=delta0, delta1=delta1, column_deleted=column)
    if module.presentation.deficiency == 1 and not delta1.is_zero():
        numerator, denominator = wada_quotient(fox, column)
        data.wada_numerator = numerator
        data.wada_denominator = denominator
        data.wada_consistent = associated(numerator * delta0, denominator * delta1)
        if not data.wada_consistent:
            logger.warning("Wada quotient disagrees with Delta_1/Delta_0 for %s", module.describe())
    logger.info("Delta_1 = %s, Delta_0 = %s (%s)", delta1, delta0, module.describe())
    return data


def alexander_polynomials(r: Representation, module: ModuleSpec | None = None) -> AlexanderData:
    return alexander_polynomials_of(twisted_fox_matrix(r, module))


def untwisted_alexander(p: Presentation, order: int) -> LaurentPoly:
    return alexander_polynomials(trivial_representation(p, 1, order)).delta1


# ---------------------------------------------------------------------------
# Root tests
# ---------------------------------------------------------------------------

@dataclass
class RootEvaluation:
    point: CyclotomicNumber
    value: CyclotomicNumber
    is_root: bool
    is_simple_root: bool

    def to_dict(self) -> dict:
        return {
            "point": str(self.point),
            "value": str(self.value),
            "is_root": self.is_root,
            "is_simple_root": self.is_simple_root,
        }


def evaluate_root(poly: LaurentPoly, point: CyclotomicNumber) -> RootEvaluation:
    """Value at ``point``; simplicity is tested with the formal derivative."""
    if poly.is_zero():
        zero = CyclotomicNumber.zero(common_order(poly.order, point.order))
        return RootEvaluation(point, zero, True, False)
    value = poly.evaluate(point)
    is_root = value.is_zero()
    simple = is_root and not poly.derivative().evaluate(point).is_zero()
    return RootEvaluation(point, value, is_root, simple)


def _nonzero(lam: Scalar, order: int) -> CyclotomicNumber:
    value = as_field(lam, order)
    if value.is_zero():
        raise EvalAtZero("lambda must be nonzero")
    return value


@dataclass
class DeformationVerdict:
    """Alexander-polynomial test for deforming the reducible representation at lambda."""

    lam: CyclotomicNumber
    delta: LaurentPoly
    evaluation: RootEvaluation

    @property
    def deformable(self) -> bool:
        return self.evaluation.is_simple_root

    def to_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "delta": self.delta.to_json(),
            "delta_text": str(self.delta),
            "delta_at_lambda_sq": str(self.evaluation.value),
            "is_root": self.evaluation.is_root,
            "is_simple_root": self.evaluation.is_simple_root,
            "deformable": self.deformable,
        }


def deformation_condition_n2(p: Presentation, lam: Scalar, order: int | None = None) -> DeformationVerdict:
    """Delta(lam^2) = 0 is necessary; a simple root suffices (rank 2)."""
    if order is None:
        order = lam.order if isinstance(lam, CyclotomicNumber) else DEFAULT_ORDER
    lam = _nonzero(lam, order)
    delta = untwisted_alexander(p, lam.order)
    evaluation = evaluate_root(delta, lam ** 2)
    logger.info("Delta(lambda^2) = %s (root=%s, simple=%s)", evaluation.value, evaluation.is_root, evaluation.is_simple_root)
    return DeformationVerdict(lam, delta, evaluation)


@dataclass
class GeneralDeformationVerdict:
    lam: CyclotomicNumber
    rank_alpha: int
    rank_beta: int
    delta1: LaurentPoly
    delta1_dual: LaurentPoly
    delta0: LaurentPoly
    evaluation: RootEvaluation
    dual_evaluation: RootEvaluation
    duality_holds: bool
    alpha_regular: bool
    beta_regular: bool
    delta0_nonzero: bool
    notes: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.rank_alpha + self.rank_beta

    @property
    def necessary_condition(self) -> bool:
        return self.evaluation.is_root and self.dual_evaluation.is_root

    @property
    def partial_converse_hypotheses(self) -> bool:
        return (
            self.alpha_regular
            and self.beta_regular
            and self.delta0_nonzero
            and self.evaluation.is_simple_root
        )

    def to_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "n": self.n,
            "delta1": self.delta1.to_json(),
            "delta1_dual": self.delta1_dual.to_json(),
            "delta0": self.delta0.to_json(),
            "evaluation": self.evaluation.to_dict(),
            "dual_evaluation": self.dual_evaluation.to_dict(),
            "duality_holds": self.duality_holds,
            "necessary_condition": self.necessary_condition,
            "partial_converse_hypotheses": self.partial_converse_hypotheses,
            "convention_dependent": True,
            "notes": list(self.notes),
        }


def deformation_condition_general(alpha: Representation, beta: Representation, lam: Scalar) -> GeneralDeformationVerdict:
    """Evaluate Delta_1 of alpha (x) beta* at lam^n and of beta (x) alpha* at lam^-n.

    Also checks the hypotheses of the partial converse: alpha and beta
    infinitesimally regular, Delta_0 of alpha (x) beta* nonzero at lam^n and
    lam^n a simple root of Delta_1. Delta_0 follows the d-minor convention of
    :func:`alexander_polynomials`, so those flags are convention-dependent.
    """
    if alpha.presentation != beta.presentation:
        raise PresentationMismatch("alpha and beta are defined on different presentations")
    for name, rep in (("alpha", alpha), ("beta", beta)):
        if not is_irreducible(rep).irreducible:
            raise NotIrreducible(f"{name} is not irreducible")
    order = common_order(alpha.order, beta.order)
    if isinstance(lam, CyclotomicNumber):
        order = common_order(order, lam.order)
    lam = _nonzero(lam, order)
    n = alpha.rank + beta.rank

    forward = alexander_polynomials_of(twisted_fox_matrix_of(HomModule(alpha, beta)))
    backward = alexander_polynomials_of(twisted_fox_matrix_of(HomModule(beta, alpha)))
    point = lam ** n
    evaluation = evaluate_root(forward.delta1, point)
    dual_evaluation = evaluate_root(backward.delta1, point.inverse())
    duality = associated(forward.delta1, backward.delta1.substitute_inverse())
    notes = []
    if not duality:
        notes.append("Delta_1 of alpha(x)beta* and beta(x)alpha*(t^-1) are not associated")
        logger.warning(notes[-1])
    delta0_value = forward.delta0.evaluate(point) if not forward.delta0.is_zero() else CyclotomicNumber.zero(order)
    logger.warning("Delta_0 uses the d-minor convention; partial converse flags are convention-dependent")
    return GeneralDeformationVerdict(
        lam=lam,
        rank_alpha=alpha.rank,
        rank_beta=beta.rank,
        delta1=forward.delta1,
        delta1_dual=backward.delta1,
        delta0=forward.delta0,
        evaluation=evaluation,
        dual_evaluation=dual_evaluation,
        duality_holds=duality,
        alpha_regular=check_infinitesimal_regularity(alpha).regular,
        beta_regular=check_infinitesimal_regularity(beta).regular,
        delta0_nonzero=not delta0_value.is_zero(),
        notes=notes,
    )


@dataclass
class SymPowerVerdict:
    lam: CyclotomicNumber
    n: int
    delta: LaurentPoly
    simple_root: RootEvaluation
    higher: list[RootEvaluation]

    @property
    def hypotheses_hold(self) -> bool:
        return self.simple_root.is_simple_root and not any(e.is_root for e in self.higher)

    @property
    def predicted_component_dim(self) -> int:
        return (self.n + 2) * (self.n - 1)

    def to_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "n": self.n,
            "delta_text": str(self.delta),
            "simple_root": self.simple_root.to_dict(),
            "higher": [e.to_dict() for e in self.higher],
            "hypotheses_hold": self.hypotheses_hold,
            "predicted_component_dim": self.predicted_component_dim,
        }


def sym_power_condition(p: Presentation, lam: Scalar, n: int, order: int | None = None) -> SymPowerVerdict:
    """lam^2 a simple root of Delta and Delta(lam^(2i)) != 0 for 2 <= i <= n-1."""
    verdict = deformation_condition_n2(p, lam, order)
    lam = verdict.lam
    higher = [evaluate_root(verdict.delta, lam ** (2 * i)) for i in range(2, n)]
    return SymPowerVerdict(lam, n, verdict.delta, verdict.evaluation, higher)
