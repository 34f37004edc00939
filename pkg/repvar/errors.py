"""Exception hierarchy shared by every repvar module.

``InputError`` subclasses mean "could not compute" (bad text, wrong shapes,
numbers outside the context field). ``VerdictError`` subclasses mean the
computation ran and the mathematical answer is negative, e.g. a relator that
does not map to the identity.
"""
from __future__ import annotations

from typing import Any


class RepvarError(Exception):
    """Base class for all repvar errors."""


class InputError(RepvarError, ValueError):
    """The request cannot be evaluated as given."""


class VerdictError(RepvarError):
    """A computed check came out negative."""


# ---------------------------------------------------------------------------
# numbers
# ---------------------------------------------------------------------------

class DivisionByZero(InputError, ZeroDivisionError):
    pass


class EvalAtZero(InputError):
    pass


class FieldMismatch(InputError):
    """Two field orders where neither divides the other."""


class UnrepresentableInput(InputError):
    """A value that does not lie in the context cyclotomic field."""


# ---------------------------------------------------------------------------
# parsing and presentations
# ---------------------------------------------------------------------------

class ParseError(InputError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InvalidAbelianization(InputError):
    def __init__(self, relator_index: int, value: int):
        self.relator_index = relator_index
        self.value = value
        super().__init__(
            f"relator {relator_index} has abelianization {value}, expected 0"
        )


class MissingAbelianization(InputError):
    pass


# ---------------------------------------------------------------------------
# linear algebra and representations
# ---------------------------------------------------------------------------

class DimensionMismatch(InputError):
    pass


class PresentationMismatch(InputError):
    pass


class RankNotTwo(InputError):
    pass


class ModuleActionUndefined(InputError):
    pass


class NonzeroTrace(InputError):
    pass


class RelationViolated(VerdictError):
    def __init__(self, relator_index: int, defect: Any):
        self.relator_index = relator_index
        self.defect = defect
        super().__init__(f"relator {relator_index} does not map to the identity")


class DeterminantMismatch(VerdictError):
    def __init__(self, generator_index: int, determinant: Any, target: Any):
        self.generator_index = generator_index
        self.determinant = determinant
        self.target = target
        super().__init__(
            f"generator {generator_index} has determinant {determinant}, expected {target}"
        )


class CocycleConditionViolated(VerdictError):
    def __init__(self, relator_index: int):
        self.relator_index = relator_index
        super().__init__(f"cocycle condition fails on relator {relator_index}")


class RootMismatch(InputError):
    pass


class NotIrreducible(InputError):
    pass


class InvalidTruncation(VerdictError):
    def __init__(self, order: int, relator_index: int):
        self.order = order
        self.relator_index = relator_index
        super().__init__(
            f"deformation is not a homomorphism modulo t^{order + 1} (relator {relator_index})"
        )


class NoDeletableColumn(VerdictError):
    pass


class UnknownEntry(RepvarError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
