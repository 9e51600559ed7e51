"""Exception types shared by the parser and the evaluators."""

from __future__ import annotations


class LogicError(Exception):
    """Base class for every error raised by polishlogic."""


class ParseError(LogicError):
    """A token string is not a well-formed Polish formula.

    ``kind`` is one of ``UnknownToken``, ``UnexpectedEnd``, ``TrailingTokens``
    or ``DepthExceeded``; ``position`` is a zero-based character index into
    the source text.
    """

    KINDS = ("UnknownToken", "UnexpectedEnd", "TrailingTokens", "DepthExceeded")

    def __init__(self, kind: str, position: int, message: str = ""):
        if kind not in self.KINDS:
            raise ValueError(f"unknown parse error kind {kind!r}")
        self.kind = kind
        self.position = position
        self.message = message or kind
        super().__init__(f"{self.message} at position {position}")


class MissingVariable(LogicError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no value assigned to variable {name!r}")


class InvalidValue(LogicError):
    """An assigned value lies outside the domain of the active semantics."""


class WeightOutOfRange(InvalidValue):
    def __init__(self, weight: float):
        self.weight = weight
        super().__init__(f"weight {weight!r} is outside [0, 1]")


class TooManyVariables(LogicError):
    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} variables exceed the enumeration limit of {limit}")


class UnsupportedOperator(LogicError):
    def __init__(self, symbol: str, semantics: str):
        self.symbol = symbol
        super().__init__(f"operator {symbol!r} has no {semantics} interpretation")


class InvalidDimension(LogicError):
    def __init__(self, d: int, message: str = ""):
        self.d = d
        super().__init__(message or f"invalid truth-vector dimension {d}")


class OutOfSpan(LogicError):
    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"vector leaves span{{f, t}} (residual {residual:.3g})")


class BasisMismatch(LogicError):
    """Operands built on different bases were combined."""
