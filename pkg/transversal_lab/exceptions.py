"""
Custom exceptions for Transversal Lab.
"""

from typing import Any, List, Optional, Tuple


class LabError(Exception):
    """Base exception for all Transversal Lab errors."""
    pass


class FormulaError(LabError):
    """Raised when a formula value is malformed."""
    pass


class ScopeError(FormulaError):
    """Raised when an assignment does not bind a needed variable, or binds one outside its scope."""
    pass


class PreconditionError(LabError):
    """Raised when an operation is called outside its precondition."""

    def __init__(self, condition: str, details: Optional[str] = None):
        self.condition = condition
        self.details = details
        message = condition if not details else f"{condition}: {details}"
        super().__init__(message)


class NotNiceError(PreconditionError):
    """Raised when a nice formula is required but deficiencies remain."""

    def __init__(self, deficiencies: List[Tuple[int, str]]):
        self.deficiencies = list(deficiencies)
        listed = ", ".join(f"({var}, {side})" for var, side in self.deficiencies)
        super().__init__("not-nice", f"deficiencies {listed}")


class ParseError(LabError):
    """Raised when a formula or graph file cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class ScaleLimitError(LabError):
    """Raised when exhaustive search would exceed a configured limit."""

    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} {value} exceeds limit {limit}")


class InvariantError(LabError):
    """Raised when an internal invariant is violated. Always a bug."""
    pass


class UnclassifiedMISError(InvariantError):
    """Raised when a maximal independent set matches no class of the gadget taxonomy."""

    def __init__(self, members: Any):
        self.members = members
        super().__init__(f"maximal independent set matches no class: {members}")


class GeneratorInfeasibleError(LabError):
    """Raised when the instance generator cannot satisfy its parameters."""
    pass
