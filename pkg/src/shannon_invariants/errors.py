"""Exception types raised across the package."""


class ShannonInvariantsError(ValueError):
    """Base class for all errors raised by this package."""


class EmptyTable(ShannonInvariantsError):
    pass


class MissingTargetColumn(ShannonInvariantsError):
    pass


class MalformedTable(ShannonInvariantsError):
    """A row has the wrong number of fields, or the header is unusable."""


class EmptyVariableSet(ShannonInvariantsError):
    pass


class IndexOutOfRange(ShannonInvariantsError):
    pass


class OverlappingSubsets(ShannonInvariantsError):
    pass


class IllDefinedInvariant(ShannonInvariantsError):
    """Raised when a ratio invariant is requested but I(X;Y) is (numerically) zero."""


class OutOfRangeInput(ShannonInvariantsError):
    pass


class UnsupportedSize(ShannonInvariantsError):
    pass


class MismatchedSourceCount(ShannonInvariantsError):
    pass


class ZeroProbabilityTarget(ShannonInvariantsError):
    pass


class OutOfRangeK(ShannonInvariantsError):
    pass


class InvalidDraw(ShannonInvariantsError):
    pass


class ShapeMismatch(ShannonInvariantsError):
    pass
