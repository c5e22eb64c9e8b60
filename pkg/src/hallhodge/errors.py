"""Exception hierarchy shared by every module."""


class HallHodgeError(Exception):
    pass


class ConfigurationError(HallHodgeError):
    """Unsupported root datum family/rank, bad job spec, unknown suite."""


class CapacityError(HallHodgeError):
    """A configured size bound would be exceeded."""


class DomainError(HallHodgeError, ValueError):
    """Input outside an operation's domain (non-dominant weight, rank mismatch, ...)."""


class InvarianceError(DomainError):
    """An element of the group algebra is not Weyl invariant."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ConsistencyError(HallHodgeError):
    """An internal identity failed; always an implementation bug, never bad input."""


class PolynomialityViolation(ConsistencyError):
    pass


class DimensionViolation(ConsistencyError):
    pass


class PositivityViolation(ConsistencyError):
    pass
