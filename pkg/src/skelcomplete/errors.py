"""Exception taxonomy shared across the package.

Every raised error subclasses a builtin so callers that do not care about
the fine-grained type can still catch ValueError/RuntimeError.
"""


class CardinalityError(ValueError):
    """A point set (or index budget) has the wrong number of elements."""


class ShapeError(ValueError):
    """Array shapes are incompatible for the requested operation."""


class ContractError(RuntimeError):
    """An operation was invoked in a state its contract forbids."""


class ConfigurationError(ValueError):
    """Model/configuration mismatch (category counts, missing checkpoints...)."""


class FormatError(ValueError):
    """A file does not follow the documented schema."""


class NormalizationError(ValueError):
    """A direction vector is too close to zero to normalize."""


class NumericalAbortError(ArithmeticError):
    """A loss or gradient went non-finite; training must stop."""


class UsageError(ValueError):
    """Bad CLI flag or config key."""


class DegenerateInputWarning(UserWarning):
    """Input is degenerate (duplicate points etc.); ties resolved by index."""
