"""Exception hierarchy shared by every schurkit module."""

from typing import Optional


class SchurkitError(Exception):
    """Base class for all schurkit errors."""


class DimensionError(SchurkitError, ValueError):
    """Sizes of paired objects disagree (matrix not square, flag length != rows)."""


class DomainError(SchurkitError, ValueError):
    """Input lies outside the domain of an operation."""


class ParseError(SchurkitError, ValueError):
    """Malformed text input.

    Attributes:
        text: The offending input
        position: Zero-based character offset of the problem, if known
    """

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class InexactDivisionError(SchurkitError, ArithmeticError):
    """A division that must be exact left a nonzero remainder."""


class BudgetExceededError(SchurkitError):
    """A size or wall-clock budget was exceeded."""


class IdentityMismatchError(SchurkitError):
    """Two routes to the same quantity disagree.

    Attributes:
        label: What was being compared
        left: Rendering of the first side
        right: Rendering of the second side
    """

    def __init__(self, label: str, left: str, right: str):
        self.label = label
        self.left = left
        self.right = right
        super().__init__(f"{label}: {left} != {right}")
