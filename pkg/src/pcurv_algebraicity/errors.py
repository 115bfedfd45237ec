class PcurvError(Exception):
    """Common base for every error raised by the package."""


class ZeroPolynomialError(PcurvError, ValueError):
    pass


class ZeroDenominatorError(PcurvError, ZeroDivisionError):
    pass


class NotInvertibleError(PcurvError, ArithmeticError):
    pass


class UnsupportedPrimeRangeError(PcurvError, ValueError):
    pass


class BadPrimeError(PcurvError, ArithmeticError):
    pass


class NoOrdinaryPointError(PcurvError, ArithmeticError):
    """Every element of F_p is a root of the reduced denominator."""


class DegenerateDenominatorError(PcurvError, ArithmeticError):
    pass


class PrimeRangeExceededError(PcurvError, ArithmeticError):
    """sigma is beyond the primes the modular kernel accepts.

    The bounds report is attached so callers can still show it.
    """

    def __init__(self, report):
        super().__init__(f"sigma={report.sigma} exceeds the supported prime range 2^62")
        self.report = report


class InterpolationMismatchError(PcurvError, RuntimeError):
    pass


class IdentityViolationError(PcurvError, RuntimeError):
    pass


class InconsistentVerdictError(PcurvError, RuntimeError):
    pass


class ExpressionSyntaxError(PcurvError, ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text

    def caret(self) -> str:
        """Two-line rendering of the input with a marker under the offending character."""
        return f"{self.text}\n{' ' * self.position}^"
