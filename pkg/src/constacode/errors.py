"""Exception hierarchy shared by every module of the package."""


class ConstacodeError(ValueError):
    """Base class; the CLI maps it to the construction-error exit code."""


class NotPrime(ConstacodeError):
    pass


class NotMonic(ConstacodeError):
    pass


class NotIrreducible(ConstacodeError):
    pass


class NotPrimitive(ConstacodeError):
    pass


class FieldTooLarge(ConstacodeError):
    pass


class NotADivisor(ConstacodeError):
    pass


class FieldMismatch(ConstacodeError):
    pass


class DivisionByZeroPoly(ConstacodeError, ZeroDivisionError):
    pass


class ZeroConstantTerm(ConstacodeError):
    pass


class NotCoprime(ConstacodeError):
    pass


class BadDivisor(ConstacodeError):
    pass


class EllOutOfRange(ConstacodeError):
    pass


class OutOfRange(ConstacodeError):
    pass


class NotADivisorOfXnMinusLambda(ConstacodeError):
    pass


class LengthMismatch(ConstacodeError):
    pass


class ShapeMismatch(ConstacodeError):
    pass


class WrongSubfield(ConstacodeError):
    pass


class LengthNotDivisible(ConstacodeError):
    pass


class EllNotCanonical(ConstacodeError):
    pass


class EllNotDecomposable(ConstacodeError):
    pass


class HOutOfRange(ConstacodeError):
    pass


class BadEllDecomposition(ConstacodeError):
    pass


class CountTooLarge(ConstacodeError):
    pass


class OutOfTheoremRange(ConstacodeError):
    """Raised by parameter predictors; ``theorem`` names the failed hypothesis."""

    def __init__(self, theorem: str, message: str):
        super().__init__(f"{theorem}: {message}")
        self.theorem = theorem


class TooLargeToEnumerate(ConstacodeError):
    def __init__(self, code_size: int, dual_size: int, cap: int):
        super().__init__(
            f"neither side is enumerable: |C| = {code_size}, |C^perp| = {dual_size}, cap = {cap}"
        )
        self.code_size = code_size
        self.dual_size = dual_size
        self.cap = cap


class InvalidDistribution(ConstacodeError):
    pass


class HypothesisViolated(ConstacodeError):
    pass


class SpecParseError(ValueError):
    """Malformed CLI spec string (family, field or range)."""
