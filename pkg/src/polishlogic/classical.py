"""Two-valued evaluation, truth tables, tautology and equivalence checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidValue, MissingVariable, TooManyVariables, UnsupportedOperator
from .syntax import Const, Formula, fold, free_variables

__all__ = [
    "NEGATION",
    "IMPLICATION",
    "CONJUNCTION",
    "DISJUNCTION",
    "TABLES",
    "MAX_VARIABLES",
    "TruthTable",
    "eval2",
    "truth_table",
    "is_tautology",
    "find_counterexample",
    "are_equivalent",
    "equivalence_counterexample",
]

MAX_VARIABLES = 16

NEGATION = {(0,): 1, (1,): 0}
IMPLICATION = {(1, 1): 1, (0, 1): 1, (0, 0): 1, (1, 0): 0}
CONJUNCTION = {(1, 1): 1, (1, 0): 0, (0, 1): 0, (0, 0): 0}
DISJUNCTION = {(1, 1): 1, (1, 0): 1, (0, 1): 1, (0, 0): 0}

TABLES = {"N": NEGATION, "C": IMPLICATION, "K": CONJUNCTION, "A": DISJUNCTION}


def _bit(value, name: str) -> int:
    if isinstance(value, bool):
        return int(value)
    if value in (0, 1):
        return int(value)
    raise InvalidValue(f"classical value of {name!r} must be 0 or 1, got {value!r}")


def eval2(formula: Formula, assignment: Mapping[str, int]) -> int:
    """Evaluate ``formula`` with 0 for false and 1 for true."""

    def leaf(f):
        if isinstance(f, Const):
            return f.value
        try:
            return _bit(assignment[f.name], f.name)
        except KeyError:
            raise MissingVariable(f.name) from None

    def node(symbol, args):
        try:
            table = TABLES[symbol]
        except KeyError:
            raise UnsupportedOperator(symbol, "classical") from None
        return table[tuple(args)]

    return fold(formula, leaf, node)


@dataclass(frozen=True)
class TruthTable:
    """Rows in binary countdown order, first variable most significant."""

    variables: tuple[str, ...]
    rows: tuple[tuple[tuple[int, ...], int], ...]

    def column(self) -> tuple[int, ...]:
        return tuple(value for _, value in self.rows)


def _assignments(variables, limit=MAX_VARIABLES):
    if len(variables) > limit:
        raise TooManyVariables(len(variables), limit)
    for values in itertools.product((1, 0), repeat=len(variables)):
        yield values, dict(zip(variables, values))


def truth_table(formula: Formula) -> TruthTable:
    variables = tuple(free_variables(formula))
    rows = tuple((values, eval2(formula, env)) for values, env in _assignments(variables))
    return TruthTable(variables, rows)


def find_counterexample(formula: Formula) -> dict[str, int] | None:
    """First assignment (in table order) making ``formula`` false, if any."""
    for _, env in _assignments(free_variables(formula)):
        if eval2(formula, env) != 1:
            return env
    return None


def is_tautology(formula: Formula) -> bool:
    return find_counterexample(formula) is None


def equivalence_counterexample(f: Formula, g: Formula) -> dict[str, int] | None:
    """First assignment over the union of variables where ``f`` and ``g`` differ.

    A variable occurring in only one formula is vacuous for the other.
    """
    variables = list(dict.fromkeys(free_variables(f) + free_variables(g)))
    for _, env in _assignments(variables):
        if eval2(f, env) != eval2(g, env):
            return env
    return None


def are_equivalent(f: Formula, g: Formula) -> bool:
    return equivalence_counterexample(f, g) is None
