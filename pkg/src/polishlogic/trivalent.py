"""Łukasiewicz and strong Kleene three-valued evaluation.

The middle value ½ is held exactly as ``Fraction(1, 2)`` inside the
:class:`Tri` enumeration.  Both logics are driven by explicit lookup
tables; the familiar algebraic forms (``1 - x``, ``min``, ``max`` and the
two implications) live in :data:`CLOSED_FORMS` only so tests can check
the tables against them.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import InvalidValue, MissingVariable, TooManyVariables, UnsupportedOperator
from .syntax import Const, Formula, fold, free_variables

__all__ = [
    "Tri",
    "to_tri",
    "LUKASIEWICZ",
    "KLEENE",
    "SEMANTICS",
    "CLOSED_FORMS",
    "MAX_VARIABLES",
    "eval3",
    "eval3_lukasiewicz",
    "eval3_kleene",
    "TrivalentTable",
    "trivalent_table",
    "Disagreement",
    "diff_semantics",
]

MAX_VARIABLES = 10


class Tri(enum.Enum):
    TRUE = Fraction(1)
    HALF = Fraction(1, 2)
    FALSE = Fraction(0)

    def __str__(self) -> str:
        return {Tri.TRUE: "1", Tri.HALF: "½", Tri.FALSE: "0"}[self]

    def __float__(self) -> float:
        return float(self.value)

    @property
    def machine(self) -> str:
        """Rendering for csv/json output."""
        return {Tri.TRUE: "1", Tri.HALF: "0.5", Tri.FALSE: "0"}[self]


ONE, HALF, ZERO = Tri.TRUE, Tri.HALF, Tri.FALSE

# row order for tables: 1, ½, 0 per variable
ORDER = (ONE, HALF, ZERO)

_SPELLINGS = {"1": ONE, "0": ZERO, "½": HALF, "1/2": HALF, "0.5": HALF, ".5": HALF}


def to_tri(value) -> Tri:
    """Coerce 0, 1, ½ in any of their usual spellings to :class:`Tri`."""
    if isinstance(value, Tri):
        return value
    if isinstance(value, str):
        try:
            return _SPELLINGS[value.strip()]
        except KeyError:
            raise InvalidValue(f"not a three-valued truth value: {value!r}") from None
    if isinstance(value, (int, float, Fraction)) and not isinstance(value, bool):
        try:
            return Tri(Fraction(value))
        except ValueError:
            pass
    elif isinstance(value, bool):
        return ONE if value else ZERO
    raise InvalidValue(f"not a three-valued truth value: {value!r}")


LUKASIEWICZ = {
    "N": {
        (ZERO,): ONE, (ONE,): ZERO,
        (HALF,): HALF,
    },
    "C": {
        (ONE, ONE): ONE, (ZERO, ONE): ONE, (ZERO, ZERO): ONE, (ONE, ZERO): ZERO,
        (ONE, HALF): HALF, (HALF, ONE): ONE,
        (ZERO, HALF): ONE, (HALF, ZERO): HALF,
        (HALF, HALF): ONE,
    },
    "K": {
        (ONE, ONE): ONE, (ONE, ZERO): ZERO, (ZERO, ONE): ZERO, (ZERO, ZERO): ZERO,
        (ONE, HALF): HALF, (HALF, ONE): HALF,
        (ZERO, HALF): ZERO, (HALF, ZERO): ZERO,
        (HALF, HALF): HALF,
    },
    "A": {
        (ONE, ONE): ONE, (ONE, ZERO): ONE, (ZERO, ONE): ONE, (ZERO, ZERO): ZERO,
        (ONE, HALF): ONE, (HALF, ONE): ONE,
        (ZERO, HALF): HALF, (HALF, ZERO): HALF,
        (HALF, HALF): HALF,
    },
}

# strong Kleene: same N, K, A; implication is max(1 - x, y)
KLEENE = {
    "N": LUKASIEWICZ["N"],
    "C": {**LUKASIEWICZ["C"], (HALF, HALF): HALF},
    "K": LUKASIEWICZ["K"],
    "A": LUKASIEWICZ["A"],
}

SEMANTICS = {"lukasiewicz": LUKASIEWICZ, "kleene": KLEENE}

CLOSED_FORMS = {
    "lukasiewicz": {
        "N": lambda x: 1 - x,
        "C": lambda x, y: min(Fraction(1), 1 - x + y),
        "K": min,
        "A": max,
    },
    "kleene": {
        "N": lambda x: 1 - x,
        "C": lambda x, y: max(1 - x, y),
        "K": min,
        "A": max,
    },
}


def eval3(formula: Formula, assignment: Mapping[str, object], semantics: str = "lukasiewicz") -> Tri:
    tables = SEMANTICS[semantics]

    def leaf(f):
        if isinstance(f, Const):
            return ONE if f.value else ZERO
        try:
            return to_tri(assignment[f.name])
        except KeyError:
            raise MissingVariable(f.name) from None

    def node(symbol, args):
        try:
            table = tables[symbol]
        except KeyError:
            raise UnsupportedOperator(symbol, semantics) from None
        return table[tuple(args)]

    return fold(formula, leaf, node)


def eval3_lukasiewicz(formula: Formula, assignment: Mapping[str, object]) -> Tri:
    return eval3(formula, assignment, "lukasiewicz")


def eval3_kleene(formula: Formula, assignment: Mapping[str, object]) -> Tri:
    return eval3(formula, assignment, "kleene")


def _assignments(variables, limit=MAX_VARIABLES):
    if len(variables) > limit:
        raise TooManyVariables(len(variables), limit)
    for values in itertools.product(ORDER, repeat=len(variables)):
        yield values, dict(zip(variables, values))


@dataclass(frozen=True)
class TrivalentTable:
    semantics: str
    variables: tuple[str, ...]
    rows: tuple[tuple[tuple[Tri, ...], Tri], ...]

    def column(self) -> tuple[Tri, ...]:
        return tuple(value for _, value in self.rows)


def trivalent_table(formula: Formula, semantics: str = "lukasiewicz") -> TrivalentTable:
    """All 3**n assignments in ternary countdown order (1, ½, 0 per digit)."""
    variables = tuple(free_variables(formula))
    rows = tuple((values, eval3(formula, env, semantics)) for values, env in _assignments(variables))
    return TrivalentTable(semantics, variables, rows)


@dataclass(frozen=True)
class Disagreement:
    assignment: dict
    lukasiewicz: Tri
    kleene: Tri


def diff_semantics(formula: Formula, limit: int = MAX_VARIABLES) -> list[Disagreement]:
    """Assignments on which the Łukasiewicz and Kleene values differ."""
    out = []
    for _, env in _assignments(free_variables(formula), limit):
        luk = eval3_lukasiewicz(formula, env)
        kle = eval3_kleene(formula, env)
        if luk is not kle:
            out.append(Disagreement(env, luk, kle))
    return out
