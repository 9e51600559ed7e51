"""Tokenizing, parsing and printing of parenthesis-free prefix formulas.

Every operator precedes its operands and has a fixed arity, so a token string
determines its tree without brackets::

    >>> to_infix(parse_formula("CCpKqNqNp"))
    '((p → (q ∧ ¬q)) → ¬p)'

The parser is generic over an :class:`OperatorTable`; the default table holds
the four connectives N (negation), C (implication), K (conjunction) and
A (disjunction).  Tokens are single characters and whitespace is ignored.
Atoms are lowercase letters, constants are ``0`` and ``1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence, TypeVar

from .errors import ParseError

__all__ = [
    "OperatorTable",
    "DEFAULT_TABLE",
    "Token",
    "Formula",
    "Atom",
    "Const",
    "Op",
    "WellFormedness",
    "MAX_DEPTH",
    "tokenize",
    "parse",
    "parse_formula",
    "is_well_formed",
    "to_polish",
    "to_infix",
    "free_variables",
    "depth",
    "fold",
    "enumerate_formulas",
    "random_formula",
]

MAX_DEPTH = 10_000

ATOM_CHARS = frozenset("abcdefghijklmnopqrstuvwxyz")
CONST_CHARS = frozenset("01")

T = TypeVar("T")


class OperatorTable:
    """Immutable map from single-character operator symbols to arities."""

    __slots__ = ("_arities",)

    def __init__(self, arities: Mapping[str, int]):
        checked = {}
        for symbol, arity in arities.items():
            if len(symbol) != 1 or symbol.isspace():
                raise ValueError(f"operator symbol must be one visible character: {symbol!r}")
            if symbol in ATOM_CHARS or symbol in CONST_CHARS:
                raise ValueError(f"operator symbol {symbol!r} collides with atoms or constants")
            if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
                raise ValueError(f"arity of {symbol!r} must be a positive integer, got {arity!r}")
            checked[symbol] = arity
        self._arities = tuple(sorted(checked.items()))

    def __contains__(self, symbol: object) -> bool:
        return any(s == symbol for s, _ in self._arities)

    def __iter__(self) -> Iterator[str]:
        return (s for s, _ in self._arities)

    def __len__(self) -> int:
        return len(self._arities)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OperatorTable) and self._arities == other._arities

    def __hash__(self) -> int:
        return hash(self._arities)

    def __repr__(self) -> str:
        return f"OperatorTable({dict(self._arities)!r})"

    def arity(self, symbol: str) -> int:
        for s, k in self._arities:
            if s == symbol:
                return k
        raise KeyError(symbol)

    def items(self) -> tuple[tuple[str, int], ...]:
        return self._arities


DEFAULT_TABLE = OperatorTable({"N": 1, "C": 2, "K": 2, "A": 2})

GLYPHS = {"N": "¬", "C": "→", "K": "∧", "A": "∨"}


class Token(NamedTuple):
    kind: str  # "op", "atom" or "const"
    char: str
    pos: int


class Formula:
    """Base class of formula tree nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_polish(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if self.name not in ATOM_CHARS:
            raise ValueError(f"atom names are single lowercase letters, got {self.name!r}")


@dataclass(frozen=True, slots=True)
class Const(Formula):
    value: int

    def __post_init__(self):
        if self.value not in (0, 1) or isinstance(self.value, bool):
            raise ValueError(f"constants are 0 or 1, got {self.value!r}")


@dataclass(frozen=True, slots=True)
class Op(Formula):
    symbol: str
    children: tuple[Formula, ...]

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))


def tokenize(text: str, table: OperatorTable = DEFAULT_TABLE) -> list[Token]:
    """Split ``text`` into one token per non-whitespace character."""
    tokens = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch in table:
            tokens.append(Token("op", ch, pos))
        elif ch in ATOM_CHARS:
            tokens.append(Token("atom", ch, pos))
        elif ch in CONST_CHARS:
            tokens.append(Token("const", ch, pos))
        else:
            raise ParseError("UnknownToken", pos, f"unknown token {ch!r}")
    return tokens


def _end_position(tokens: Sequence[Token], end: int | None) -> int:
    if end is not None:
        return end
    return tokens[-1].pos + 1 if tokens else 0


def parse(tokens: Sequence[Token], table: OperatorTable = DEFAULT_TABLE, *, end: int | None = None) -> Formula:
    """Build the formula tree of a token list.

    ``end`` is the character position reported for ``UnexpectedEnd``; it
    defaults to one past the last token.  The parser keeps an explicit stack
    of open operators, so deep formulas do not hit the interpreter's
    recursion limit; nesting beyond :data:`MAX_DEPTH` operators is rejected.
    """
    stack: list[tuple[str, int, list[Formula]]] = []
    for index, tok in enumerate(tokens):
        if tok.kind == "op":
            if len(stack) >= MAX_DEPTH:
                raise ParseError("DepthExceeded", tok.pos, f"nesting deeper than {MAX_DEPTH}")
            stack.append((tok.char, table.arity(tok.char), []))
            continue
        node: Formula = Atom(tok.char) if tok.kind == "atom" else Const(int(tok.char))
        while stack:
            symbol, arity, children = stack[-1]
            children.append(node)
            if len(children) < arity:
                break
            stack.pop()
            node = Op(symbol, tuple(children))
        else:
            if index + 1 < len(tokens):
                nxt = tokens[index + 1]
                raise ParseError("TrailingTokens", nxt.pos, f"unexpected {nxt.char!r} after a complete formula")
            return node
    raise ParseError("UnexpectedEnd", _end_position(tokens, end), "input ended inside a formula")


def parse_formula(text: str, table: OperatorTable = DEFAULT_TABLE) -> Formula:
    """Tokenize and parse ``text`` in one step."""
    return parse(tokenize(text, table), table, end=len(text))


class WellFormedness(NamedTuple):
    ok: bool
    position: int | None  # character index of the failure, None when ok


def is_well_formed(tokens: Sequence[Token], table: OperatorTable = DEFAULT_TABLE, *, end: int | None = None) -> WellFormedness:
    """Single left-to-right arity count, equivalent to :func:`parse` succeeding.

    ``need`` counts the formulas still owed.  It starts at 1; an atom pays
    one, an operator of arity k replaces one owed formula with k.
    """
    need = 1
    for tok in tokens:
        if need == 0:
            return WellFormedness(False, tok.pos)
        need += table.arity(tok.char) - 1 if tok.kind == "op" else -1
    if need == 0:
        return WellFormedness(True, None)
    return WellFormedness(False, _end_position(tokens, end))


def fold(formula: Formula, leaf: Callable[[Formula], T], node: Callable[[str, list[T]], T]) -> T:
    """Post-order evaluation without recursion.

    ``leaf`` maps an :class:`Atom` or :class:`Const` to a value; ``node``
    combines an operator symbol with its children's values.
    """
    results: list[T] = []
    work: list[tuple[Formula, bool]] = [(formula, False)]
    while work:
        f, expanded = work.pop()
        if not isinstance(f, Op):
            results.append(leaf(f))
        elif expanded:
            k = len(f.children)
            args = results[len(results) - k:]
            del results[len(results) - k:]
            results.append(node(f.symbol, args))
        else:
            work.append((f, True))
            work.extend((c, False) for c in reversed(f.children))
    return results[0]


def _preorder(formula: Formula) -> Iterator[Formula]:
    work = [formula]
    while work:
        f = work.pop()
        yield f
        if isinstance(f, Op):
            work.extend(reversed(f.children))


def _char(f: Formula) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Const):
        return str(f.value)
    return f.symbol


def to_polish(formula: Formula) -> str:
    return "".join(_char(f) for f in _preorder(formula))


def to_infix(formula: Formula, glyphs: Mapping[str, str] = GLYPHS) -> str:
    """Fully parenthesized infix rendering.

    Unary operators prefix their operand, binary ones sit between
    parenthesized operands, wider ones use call syntax ``X(a, b, c)``.
    """

    def node(symbol: str, args: list[str]) -> str:
        g = glyphs.get(symbol, symbol)
        if len(args) == 1:
            return g + args[0]
        if len(args) == 2:
            return f"({args[0]} {g} {args[1]})"
        return f"{g}({', '.join(args)})"

    return fold(formula, _char, node)


def free_variables(formula: Formula) -> list[str]:
    """Distinct atom names in order of first occurrence."""
    seen: dict[str, None] = {}
    for f in _preorder(formula):
        if isinstance(f, Atom):
            seen.setdefault(f.name)
    return list(seen)


def depth(formula: Formula) -> int:
    """Operator nesting depth; atoms and constants have depth 0."""
    return fold(formula, lambda _: 0, lambda _, args: 1 + max(args))


def enumerate_formulas(
    max_depth: int,
    variables: Iterable[str] = ("p", "q"),
    table: OperatorTable = DEFAULT_TABLE,
    constants: bool = False,
) -> list[Formula]:
    """Every formula of depth at most ``max_depth`` over the given leaves.

    The count grows doubly exponentially; over {p, q} with the default table
    depth 2 gives 786 formulas and depth 3 about 1.85 million.
    """
    leaves: list[Formula] = [Atom(v) for v in variables]
    if constants:
        leaves += [Const(0), Const(1)]
    layers = [leaves]  # layers[k]: formulas of depth exactly k
    for k in range(1, max_depth + 1):
        below = [f for layer in layers for f in layer]
        deepest = set(layers[-1])
        new = []
        for symbol, arity in table.items():
            for combo in itertools.product(below, repeat=arity):
                # at least one child must sit at depth k - 1
                if any(c in deepest for c in combo):
                    new.append(Op(symbol, combo))
        layers.append(new)
    return [f for layer in layers for f in layer]


def random_formula(
    rng,
    max_depth: int,
    variables: Sequence[str] = ("p", "q"),
    table: OperatorTable = DEFAULT_TABLE,
    leaf_probability: float = 0.3,
) -> Formula:
    """Draw a formula of depth at most ``max_depth``.

    ``rng`` is anything with a ``random()`` method, such as
    :class:`random.Random` or a numpy ``Generator``.
    """
    ops = list(table.items())
    if max_depth == 0 or rng.random() < leaf_probability:
        return Atom(variables[int(rng.random() * len(variables))])
    symbol, arity = ops[int(rng.random() * len(ops))]
    return Op(symbol, tuple(random_formula(rng, max_depth - 1, variables, table, leaf_probability) for _ in range(arity)))
