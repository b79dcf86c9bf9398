"""
Exception hierarchy shared by every polycell layer.

Each error carries the process exit code the CLI reports for it.
"""

from typing import Optional


class PolycellError(Exception):
    """Base class for all domain errors."""

    exit_code = 2


# Structural validation


class DanglingEdge(PolycellError):
    pass


class DuplicateId(PolycellError):
    pass


class UnknownVertex(PolycellError):
    pass


class EmptyWalk(PolycellError):
    pass


class InvalidWalk(PolycellError):
    pass


# Products


class LengthMismatch(PolycellError):
    pass


class IndexOutOfRange(PolycellError):
    pass


class NotInS0(PolycellError):
    pass


class NotSimple(PolycellError):
    pass


class AmbiguousId(PolycellError):
    """A factor id would not decode uniquely inside a product id."""


# Symmetry and factorization


class TooLarge(PolycellError):
    exit_code = 3


class BudgetExceeded(PolycellError):
    exit_code = 3


class LabelMapMissing(PolycellError):
    pass


class InvalidSplit(PolycellError):
    pass


class HypothesisViolated(PolycellError):
    pass


# Face blocks


class OddFaces(PolycellError):
    pass


class NotOrdinary(PolycellError):
    pass


class NotIncident(PolycellError):
    pass


class RangeError(PolycellError):
    pass


# Corpus and documents


class BadParameter(PolycellError):
    pass


class ParseError(PolycellError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SemanticError(PolycellError):
    def __init__(self, message: str, invariant: Optional[str] = None):
        text = f"{invariant}: {message}" if invariant else message
        super().__init__(text)
        self.invariant = invariant
