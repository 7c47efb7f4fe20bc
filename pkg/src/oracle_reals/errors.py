"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any, Iterable


class ContainsZero(ArithmeticError):
    """An interval operation needed a divisor that excludes 0."""


class ParseError(ValueError):
    """Malformed input text.

    ``position`` is the 0-based offset of the offending character and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, message: str, position: int = 0, expected: Iterable[str] = ()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


class InvalidInput(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class TargetOutsideInterval(ValueError):
    pass


class InconsistentPredicates(ValueError):
    pass


class NotYesInterval(ValueError):
    """A refinement was started from an interval the oracle does not affirm."""


class DomainError(ArithmeticError):
    """No argument tuple inside the operator's domain could be found."""


class NoSmallEnough(LookupError):
    """A sequence never produced an error bound below the requested width."""


class BudgetExceeded(RuntimeError):
    """A refinement loop ran out of budget.

    ``partial`` carries whatever was computed before giving up.
    """

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


class UndecidedError(BudgetExceeded):
    """An oracle answered Undecided where a definite answer was needed."""
