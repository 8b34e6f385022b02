"""
Exception hierarchy for skewalg.

Mathematical check failures (compatibility, relation checks, certificates) are
returned as report payload. Exceptions are reserved for misuse and for states
that can only be reached through an implementation bug.
"""


class SkewAlgError(Exception):
    """Base class for every error raised by the library."""


class FlavorMismatchError(SkewAlgError):
    """Arithmetic between scalars of different flavors."""


class ScalarDivisionError(SkewAlgError):
    """Division by zero or by a non-unit."""


class SpecializationError(SkewAlgError):
    """Parameter evaluation that would invert zero."""


class ContextMismatchError(SkewAlgError):
    """Operands that live in different rings or instances."""


class UndefinedEndomorphismError(SkewAlgError):
    """Unknown endomorphism or derivation name for a ring."""


class NonDivisibleError(SkewAlgError):
    """A (z1 - z2) division that should be exact was not."""


class CharacteristicError(SkewAlgError):
    """A construction needing 1/2 was requested in characteristic 2."""


class CompatibilityError(SkewAlgError):
    """Quadratic data failed the normality check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotInvertibleError(SkewAlgError):
    """Inversion of a non-unit, or transport through a non-invertible twist."""


class HypothesisError(SkewAlgError):
    """The ring does not satisfy what a reduction needs (division ring, outer derivation)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


class IncompleteReductionError(SkewAlgError):
    """Saturation stopped before a certificate could be verified."""

    def __init__(self, message, depth=None):
        super().__init__(message)
        self.depth = depth


class ExpressionError(SkewAlgError):
    """Parse or evaluation error in the expression language."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownContextError(SkewAlgError):
    """A context, preset or relation name that is not registered."""


class EmptyGeneratorSetError(SkewAlgError):
    """An ideal operation was handed no nonzero generators."""
