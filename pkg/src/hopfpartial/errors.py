"""Exception types shared across the package."""


class HopfPartialError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(HopfPartialError):
    pass


class SingularMatrixError(HopfPartialError):
    pass


class ParseError(HopfPartialError):
    pass


class ShapeError(HopfPartialError):
    pass


class VerificationError(HopfPartialError):
    """An axiom or certificate check failed where a verified object was required."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvalidGroup(HopfPartialError):
    pass


class BadCharacteristic(HopfPartialError):
    pass


class NotRightIdeal(HopfPartialError):
    pass


class NotUnitOnA(HopfPartialError):
    pass


class SeedNotSubalgebra(HopfPartialError):
    pass


class AssociativityFailure(HopfPartialError):
    pass


class NonCentralIdempotent(HopfPartialError):
    pass
