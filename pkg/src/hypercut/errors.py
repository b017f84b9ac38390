"""
hypercut Errors
===============
Exception hierarchy for the toolkit.

Every error subclasses ``HypercutError``, which itself subclasses
``ValueError`` so callers that only guard against bad values keep working.
"""

from typing import Optional


class HypercutError(ValueError):
    """Base class for all toolkit errors."""


# --- Construction and input ---

class VertexOutOfRange(HypercutError):
    pass


class SingletonHyperedge(HypercutError):
    pass


class DuplicateHyperedge(HypercutError):
    pass


class ParseError(HypercutError):
    """Malformed ``.hgr`` input. ``line`` is 1-based, or None for the whole file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadParams(HypercutError):
    pass


# --- Set arguments ---

class EmptySide(HypercutError):
    pass


class VertexNotInSet(HypercutError):
    pass


class NotNested(HypercutError):
    pass


class OverlappingBlocks(HypercutError):
    pass


class NoSplit(HypercutError):
    pass


# --- Size limits ---

class TooSmall(HypercutError):
    pass


class TooLarge(HypercutError):
    pass


# --- Algorithm parameters ---

class BadK(HypercutError):
    pass


class BadPhi(HypercutError):
    pass


class BadS(HypercutError):
    pass


# --- Graph encodings ---

class InvalidDirectedCut(HypercutError):
    pass


class InvalidSeparator(HypercutError):
    pass


class Unbounded(HypercutError):
    pass


class NoCutFound(HypercutError):
    """Every randomized trial came back empty."""


# --- Generators ---

class Infeasible(HypercutError):
    pass


class OddN(HypercutError):
    pass


class NotSquare(HypercutError):
    pass
