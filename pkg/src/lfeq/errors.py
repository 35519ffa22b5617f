"""Exception hierarchy shared by all modules."""


class LfeqError(ValueError):
    """Base class for input and consistency errors raised by lfeq."""


class NotPrime(LfeqError):
    pass


class DegreeOutOfRange(LfeqError):
    pass


class FieldMismatch(LfeqError):
    pass


class DivisionByZero(LfeqError, ZeroDivisionError):
    pass


class IndexOutOfRange(LfeqError):
    pass


class FieldTooLarge(LfeqError):
    pass


class DimensionMismatch(LfeqError):
    pass


class NotSquare(LfeqError):
    pass


class ZeroPolynomial(LfeqError):
    pass


class ZeroParameter(LfeqError):
    pass


class NotASubfield(LfeqError):
    """Internal consistency failure: a computed homogeneity set is not a field."""


class TooLarge(LfeqError):
    pass


class UnsupportedCase(LfeqError):
    pass


class BadParameterShape(LfeqError):
    pass


class NotASolution(LfeqError):
    pass


class BadIndices(LfeqError):
    pass


class NotSquarefree(LfeqError):
    pass


class ParseError(LfeqError):
    pass
