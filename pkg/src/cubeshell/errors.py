"""Exceptions shared across the package."""


class CubeshellError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(CubeshellError):
    """Bad input from the caller: malformed point files, bad CLI values."""


class EmptyInputError(CubeshellError):
    """A point source held no data rows at all."""


class UnsupportedDimensionError(UsageError):
    """Point dimension outside the supported range 1..3."""

    def __init__(self, dim: int):
        self.dim = dim
        super().__init__(f"unsupported dimension {dim}; this solver handles d in {{1, 2, 3}}")


class PreconditionError(CubeshellError):
    """A function was called with arguments that violate its contract."""
