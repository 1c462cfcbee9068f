"""Exception types raised across the package."""


class PCyclicError(ValueError):
    """Base class for invalid-input conditions."""


class NotPrime(PCyclicError):
    pass


class NotIrreducible(PCyclicError):
    pass


class NotPrimitive(PCyclicError):
    pass


class TableTooLarge(PCyclicError):
    pass


class LogOfZero(PCyclicError):
    pass


class BadModulus(PCyclicError):
    pass


class DivisionByZero(PCyclicError, ZeroDivisionError):
    pass


class CoefficientNotInBaseField(ArithmeticError):
    """A minimal polynomial came out with coefficients outside F_p.

    Only a corrupted field context can trigger this.
    """


class DegenerateDefiningSet(PCyclicError):
    pass


class OracleTooLarge(PCyclicError):
    pass


class HypothesisFailed(PCyclicError):
    pass


class CaseHypothesisFailed(HypothesisFailed):
    pass
