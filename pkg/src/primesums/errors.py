"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class PreconditionError(ValueError):
    """A hypothesis required by an operation does not hold on the table.

    ``witness`` carries the offending input when one is known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(MemoryError):
    """The requested tables would exceed the configured memory budget."""
