"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PrecisionError(RuntimeError):
    """The requested accuracy cannot be certified with the available precision."""


class UnsupportedError(RuntimeError):
    """A structurally valid input hits a case the implementation does not cover."""
