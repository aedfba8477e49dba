"""Shared exception types."""


class ParameterError(ValueError):
    """An argument is outside its documented domain."""


class ShapeError(ValueError):
    """Array shapes are incompatible with the operation."""


class StateError(RuntimeError):
    """Operation invoked in an invalid lifecycle state (untrained weights,
    closed session, decision without a pending candidate, ...)."""


class DataError(ValueError):
    """Input data is structurally valid but unusable (single-class pairs,
    degenerate similarity sets, empty manifests)."""


class NumericalDomainError(ArithmeticError):
    """A numeric quantity left the domain where the formula is stable."""


class CheckpointMismatchError(RuntimeError):
    """Stored blob was produced under a different config hash."""
