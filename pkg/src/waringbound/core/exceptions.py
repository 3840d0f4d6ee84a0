"""Custom exception classes for the waringbound package."""

from typing import Optional, Tuple


class WaringError(Exception):
    """Base exception class for all waringbound errors."""

    pass


class ConfigurationError(WaringError):
    """Raised when there is an error in configuration."""

    pass


class VariableIndexError(WaringError, IndexError):
    """Raised when a variable or pair index lies outside the ring."""

    pass


class ParseError(WaringError):
    """Raised when a polynomial expression cannot be parsed."""

    def __init__(self, message: str, position: int, source: str = "") -> None:
        self.message = message
        self.position = position
        self.source = source
        super().__init__(self._format())

    def _format(self) -> str:
        text = f"{self.message} at position {self.position}"
        if self.source:
            text += f"\n  {self.source}\n  {' ' * self.position}^"
        return text


class NotInSubringObstruction(WaringError):
    """
    Raised when a coefficient fails the divisibility required of J(2^n, R_m).

    The failure is a certificate: every signed sum of 2^n-th powers has a coefficient
    divisible by ``divisor`` at ``monomial``, so the polynomial cannot be such a sum.
    """

    def __init__(
        self,
        pair: Tuple[int, int],
        monomial: str,
        coefficient: int,
        divisor: int,
    ) -> None:
        self.pair = pair
        self.monomial = monomial
        self.coefficient = coefficient
        self.divisor = divisor
        super().__init__(
            f"coefficient {coefficient} of {monomial} is not divisible by {divisor} "
            f"(pair {pair[0]},{pair[1]}); the polynomial is not a signed sum of powers"
        )


class DimensionTooLargeError(WaringError):
    """Raised when an exhaustive method is asked for a dimension it cannot sweep."""

    def __init__(self, method: str, m: int, limit: int) -> None:
        self.method = method
        self.m = m
        self.limit = limit
        super().__init__(f"{method} supports m <= {limit}, got m = {m}")


class CrossCheckError(WaringError):
    """Raised when two independent computation paths disagree."""

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        self.details = details or {}
        super().__init__(message)


class ExportError(WaringError):
    """Raised when export operation fails."""

    pass
