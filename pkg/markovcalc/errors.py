"""Exceptions raised by markovcalc."""

from typing import Optional


class MarkovCalcError(Exception):
    """Base class for every error raised by the package."""


class ParseError(MarkovCalcError):
    """Syntax error in an expression or definition file."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        """Initialize the parse error.

        Args:
            message: What went wrong
            line: 1-based line of the offending token
            column: 1-based column of the offending token
        """
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownIdentifier(ParseError):
    """An identifier that is neither `t`, `sqrt2`, a builtin nor a bound name."""


class MalformedLiteral(ParseError):
    """A numeric literal such as `1/0` or `3/`."""


class EvaluationError(MarkovCalcError):
    """Failure while evaluating an expression or an interval function."""


class DivisionByZero(EvaluationError, ZeroDivisionError):
    """Exact division by zero."""

    def __init__(self, message: str = "division by zero", location: Optional[str] = None):
        if location:
            message = f"{message} at {location}"
        super().__init__(message)
        self.location = location


class NoBranchMatched(EvaluationError):
    """A piecewise expression selected no branch (unreachable with an else-branch)."""


class OutOfDomain(EvaluationError):
    """A point outside the open domain of an interval function."""


class EndpointOrderViolation(EvaluationError):
    """f(t) > g(t) at an evaluated point."""


class IntervalOrderError(MarkovCalcError, ValueError):
    """An interval constructed with lo > hi."""


class ConfigError(MarkovCalcError, ValueError):
    """Invalid ladder or settings value."""


class EmptyLadder(MarkovCalcError):
    """No ladder point fits inside the domain."""


class MissingOneSided(MarkovCalcError):
    """A one-sided endpoint derivative needed by a check does not exist."""


class WitnessNotContinuous(MarkovCalcError):
    """The continuity witness named for the slope identity failed its ladder check."""


class PreconditionFailed(MarkovCalcError):
    """A documented precondition of a check does not hold."""
