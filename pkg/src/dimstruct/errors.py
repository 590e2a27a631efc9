"""Exception hierarchy shared by all modules."""


class DimStructError(Exception):
    """Base class for every error raised by the package."""


class UnknownElement(DimStructError, KeyError):
    pass


class UnknownPoint(DimStructError, KeyError):
    pass


class CycleError(DimStructError, ValueError):
    """The closure of a relation violates antisymmetry."""


class DisjointnessError(DimStructError, ValueError):
    pass


class TotalityError(DimStructError, ValueError):
    """A measurement table is missing an entry."""


class ShapeError(DimStructError, ValueError):
    """An operation was applied to a poset or map of the wrong shape."""


class PreconditionError(DimStructError, ValueError):
    pass


class ValidationError(DimStructError, ValueError):
    """A candidate failed the axioms; ``report`` carries the witnesses."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PreInvalid(ValidationError):
    pass


class PostValidationError(ValidationError):
    pass


class LawViolation(DimStructError, AssertionError):
    """A proved law failed on a concrete instance (an implementation bug
    or a genuine counterexample)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InconsistencyError(LawViolation):
    pass


class CombinerLawError(DimStructError, ValueError):
    pass


class NotAPartialOrder(DimStructError, ValueError):
    pass


class NotASubstructure(DimStructError, ValueError):
    pass


class MissingInfimum(DimStructError, ValueError):
    pass


class VerificationError(DimStructError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSurjective(DimStructError, ValueError):
    pass


class ParseError(DimStructError, ValueError):
    pass


class UnknownName(DimStructError, ValueError):
    pass


class UnsupportedForm(DimStructError, ValueError):
    """A growth term outside c * f_m(n) * n^beta * (log n)^gamma."""


class EqualPoints(DimStructError, ValueError):
    """A distance-scale dimension asked for a pair of equal vectors."""


class NegativeInput(DimStructError, ValueError):
    pass


class PrecisionError(DimStructError, ArithmeticError):
    pass


class NotDecreasing(DimStructError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class WindowTooSmall(DimStructError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
