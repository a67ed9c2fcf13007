"""Errors raised by plucker_asl."""

from dataclasses import dataclass
from typing import List, Optional


class PluckerAslError(Exception):
    """Base class for every error raised by this package."""


class ZeroPolynomialError(PluckerAslError, ValueError):
    def __init__(self, message: str = "zero polynomial"):
        super().__init__(message)


class UnknownVariableError(PluckerAslError, KeyError):
    def __init__(self, variable=None):
        self.variable = variable
        message = "variable not in order"
        if variable is not None:
            message = f"{message}: {variable}"
        super().__init__(message)

    def __str__(self) -> str:
        # KeyError quotes its message otherwise
        return self.args[0]


class MissingAssignmentError(PluckerAslError, KeyError):
    def __init__(self, variable):
        self.variable = variable
        super().__init__(f"no assignment for variable {variable}")

    def __str__(self) -> str:
        return self.args[0]


class InvalidIndexError(PluckerAslError, ValueError):
    pass


class InvalidOrderError(PluckerAslError, ValueError):
    pass


class InvalidSystemError(PluckerAslError, ValueError):
    pass


class NotALatticeError(PluckerAslError, ValueError):
    pass


class NotPerfectError(PluckerAslError, ValueError):
    pass


class NotCompatibleError(PluckerAslError, ValueError):
    pass


class ArrangementError(PluckerAslError, ValueError):
    pass


class BudgetExceeded(PluckerAslError, RuntimeError):
    """A computation ran past its configured resource cap.

    Attributes:
        budget: the cap that was configured
        used: how much was consumed when the computation stopped
    """

    def __init__(self, message: str, budget: int, used: Optional[int] = None):
        self.budget = budget
        self.used = used
        super().__init__(message)


@dataclass
class FormatIssue:
    # A description of the error
    message: str
    # A picture of the offending line with a caret under the error
    description: str
    # Offset into the parsed text
    pos: int

    def __repr__(self) -> str:
        return f"{self.message}\n\n{self.description}"


class FormatError(PluckerAslError, ValueError):
    def __init__(self, message: str, errors: Optional[List[FormatIssue]] = None):
        self.errors = errors or []
        super().__init__(message)


class AmbientMismatchError(PluckerAslError, ValueError):
    pass


class EmptyPosetError(PluckerAslError, ValueError):
    def __init__(self, message: str = "empty poset"):
        super().__init__(message)


class ConsistencyError(PluckerAslError, AssertionError):
    """Independent computations of the same quantity disagree."""


class ConfigError(PluckerAslError, ValueError):
    """A configuration value is missing or has the wrong type."""
