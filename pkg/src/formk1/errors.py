"""Exception hierarchy shared by all modules."""


class FormK1Error(Exception):
    """Base class for library errors."""


class ParseError(FormK1Error):
    """Malformed descriptor, element string, or JSON payload."""


class Undecidable(FormK1Error):
    """No decision procedure for this descriptor kind."""


class DimensionMismatch(FormK1Error):
    pass


class BadParameter(FormK1Error):
    """Diagonal generator parameter outside its required set."""


class ParameterNotInIdeal(FormK1Error):
    pass


class MalformedWord(FormK1Error):
    pass


class PreconditionFailed(FormK1Error):
    pass


class NotAUnit(FormK1Error):
    pass


class NotInvertible(FormK1Error):
    pass


class NotHermitian(FormK1Error):
    pass


class NotQuadratic(FormK1Error):
    pass


class NotNilpotent(FormK1Error):
    pass


class NotCongruent(FormK1Error):
    pass


class ConstraintViolated(FormK1Error):
    pass


class ConditionViolated(FormK1Error):
    """Carries the 1-based index of the failing normal-form condition."""

    def __init__(self, index, message=""):
        self.index = index
        super().__init__(message or f"condition {index} violated")


class KNotInvertible(FormK1Error):
    pass


class HypothesisFailed(FormK1Error):
    pass


class DegreeError(FormK1Error):
    pass
