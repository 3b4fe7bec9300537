"""Exception hierarchy shared by every module."""

from __future__ import annotations


class BkError(Exception):
    """Base class for all library errors."""


class NotPrime(BkError, ValueError):
    pass


class ReduciblePolynomial(BkError, ValueError):
    pass


class DegreeMismatch(BkError, ValueError):
    pass


class DivisionByZero(BkError, ZeroDivisionError):
    pass


class ShapeMismatch(BkError, ValueError):
    pass


class LengthMismatch(ShapeMismatch):
    pass


class LevelOutOfRange(BkError, ValueError):
    pass


class EmptyGeneratorList(BkError, ValueError):
    pass


class TooLargeToEnumerate(BkError):
    """Raised when an exhaustive computation would exceed the configured cap."""

    def __init__(self, quantity: str, value: int, cap: int) -> None:
        super().__init__(f"{quantity}={value} exceeds cap {cap}")
        self.quantity = quantity
        self.value = value
        self.cap = cap


class MatrixTooLarge(TooLargeToEnumerate):
    pass


class KindMismatch(BkError, ValueError):
    pass


class NonIntegralResult(BkError, ArithmeticError):
    pass


class BadShift(BkError, ValueError):
    pass


class NotCyclic(BkError, ValueError):
    pass
