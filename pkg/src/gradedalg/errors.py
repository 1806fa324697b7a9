"""Exception types shared across the package.

The CLI maps these onto exit codes: malformed input files raise ParseError
(exit 1), violated mathematical preconditions raise PreconditionError
subclasses (exit 2), and CheckFailed signals an internal consistency
failure that should never happen on valid input (exit 3).
"""

from __future__ import annotations


class GradedAlgebraError(Exception):
    """Base class for all library errors."""


class ParseError(GradedAlgebraError):
    """Malformed algebra file."""


class PreconditionError(GradedAlgebraError):
    """An operation was called on input violating its stated hypotheses."""


class ValidationError(PreconditionError):
    """An algebra presentation failed validation."""


class NonAssociative(ValidationError):
    pass


class UnitMismatch(ValidationError):
    pass


class GradingViolation(ValidationError):
    pass


class IdempotentFault(ValidationError):
    pass


class NotPrimitive(ValidationError):
    pass


class PrimeTooSmall(ValidationError):
    pass


class TrivialGrading(PreconditionError):
    """Operation requires a nontrivial grading (top degree >= 1)."""


class NotIdempotent(PreconditionError):
    pass


class ZeroBimodule(PreconditionError):
    pass


class ActionFault(PreconditionError):
    """Bimodule action tables violate the bimodule axioms."""


class NotAutomorphism(PreconditionError):
    pass


class AlgebraMismatch(PreconditionError):
    """Modules over different algebras were combined."""


class NotBasic(PreconditionError):
    pass


class NotSelfInjective(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    """Pipeline-level hypothesis failure; carries the failing hypothesis."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        super().__init__(f"{hypothesis}" + (f": {detail}" if detail else ""))


class AmbiguousMatch(GradedAlgebraError):
    """Nakayama matching was not unique; signals a bug or non-basic input."""


class GeneratorNotFound(GradedAlgebraError):
    """Bimodule generator search exhausted; signals a bug or bad hypothesis."""


class CheckFailed(GradedAlgebraError):
    """A re-runnable certificate check failed; signals a bug."""

    def __init__(self, message: str, transcript=None):
        self.transcript = transcript
        super().__init__(message)
