"""Exception types shared across the library."""


class ParameterError(ValueError):
    """A parameter lies outside the mathematical domain of an operation."""


class UnsupportedDimensionError(ParameterError):
    """The requested dimension has no explicit implementation."""


class DomainError(ValueError):
    """An evaluation point lies outside the region an operation is defined on."""


class NumericError(RuntimeError):
    """An internal numerical routine failed to deliver a trustworthy result."""
