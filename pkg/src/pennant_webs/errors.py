"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed argument: bad indices, size mismatch, non-standard filling."""


class EmptyInputError(ValueError):
    """An operation that needs a nonzero polynomial received the zero polynomial."""


class InconsistentRolesError(ValueError):
    """Block roles (minima/middles/maxima) admit no noncrossing completion."""


class SingletonBlockError(ValueError):
    """A jellyfish tableau was requested for a partition with a singleton block."""


class NotInSpanError(ValueError):
    """Triangular elimination left a nonzero residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
