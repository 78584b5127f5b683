"""Exception types.

Every error carries a stable ``code`` string, used verbatim in the JSON error
objects the command line prints.
"""


class QuadlieError(ValueError):
    code = "Error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


class IndexOutOfRange(QuadlieError):
    code = "IndexOutOfRange"


class DuplicatePair(QuadlieError):
    code = "DuplicatePair"


class ZeroCoefficient(QuadlieError):
    code = "ZeroCoefficient"


class DimensionMismatch(QuadlieError):
    code = "DimensionMismatch"


class NotConnected(QuadlieError):
    code = "NotConnected"


class NotNonNegative(QuadlieError):
    code = "NotNonNegative"


class UnrecognizedRootCount(QuadlieError):
    code = "UnrecognizedRootCount"


class NotARoot(QuadlieError):
    code = "NotARoot"


class NotNonIsotropic(QuadlieError):
    code = "NotNonIsotropic"


class FormMismatch(QuadlieError):
    code = "FormMismatch"


class GaugeMismatch(QuadlieError):
    code = "GaugeMismatch"


class MalformedWord(QuadlieError):
    code = "MalformedWord"


class InvalidInput(QuadlieError):
    code = "InvalidInput"
