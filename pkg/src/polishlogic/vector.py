"""Matrix-vector ("neural") logic.

Truth values become orthonormal vectors ``f`` and ``t``; a connective is a
matrix memory built from outer products, negation ``d x d`` and the dyadic
connectives ``d x d**2``.  A dyadic matrix acts on the Kronecker product of
its two argument vectors, so evaluating a formula reads its operators and
variables in exactly Polish order::

    C(t ⊗ f) = f,    K(t ⊗ t) = t,    N = f tᵀ + t fᵀ

Uncertain values are convex combinations ``α t + (1 - α) f``.  Because the
matrices are linear, the weight on ``t`` after one connective has a closed
form in the input weights (see :data:`PROJECTIONS`), which gives a second,
basis-free route to the same numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    BasisMismatch,
    InvalidDimension,
    MissingVariable,
    OutOfSpan,
    UnsupportedOperator,
    WeightOutOfRange,
)
from .syntax import Const, Formula, fold, free_variables, parse_formula
from .trivalent import HALF, ONE, ZERO, Tri, _assignments, eval3_lukasiewicz

__all__ = [
    "MAX_DIM",
    "Basis",
    "TruthVector",
    "LogicMatrix",
    "CONNECTIVES",
    "PROJECTIONS",
    "REFERENCE_UNCERTAIN_RESULTS",
    "make_basis",
    "kron",
    "build_matrix",
    "vectorize",
    "decode",
    "eval_matrix",
    "eval_projection",
    "Discrepancy",
    "Erratum",
    "DiscrepancyReport",
    "diff_lukasiewicz_projection",
    "compare_with_lukasiewicz",
    "dump_matrix",
]

MAX_DIM = 64
SPAN_TOL = 1e-9
COLLINEAR_COS = 1 - 1e-6


@dataclass(frozen=True, eq=False)
class Basis:
    """Orthonormal pair ``f`` ("false"), ``t`` ("true") in R**d."""

    f: np.ndarray
    t: np.ndarray
    _matrices: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        f = np.array(self.f, dtype=float)
        t = np.array(self.t, dtype=float)
        if f.ndim != 1 or f.shape != t.shape:
            raise InvalidDimension(f.size, "f and t must be vectors of equal length")
        if f.size < 2 or f.size > MAX_DIM:
            raise InvalidDimension(f.size)
        for name, value in (("<f,f>", f @ f - 1), ("<t,t>", t @ t - 1), ("<f,t>", f @ t)):
            if abs(value) > 1e-12:
                raise ValueError(f"basis is not orthonormal: {name} off by {value:.3g}")
        f.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "t", t)

    @property
    def d(self) -> int:
        return self.f.size

    def same_as(self, other: Basis) -> bool:
        return self is other or (
            np.array_equal(self.f, other.f) and np.array_equal(self.t, other.t)
        )

    def matrix(self, symbol: str) -> LogicMatrix:
        """Connective matrix for this basis, built once and memoized."""
        try:
            return self._matrices[symbol]
        except KeyError:
            m = self._matrices[symbol] = build_matrix(symbol, self)
            return m


def make_basis(d: int, mode: str = "canonical", seed: int | None = None) -> Basis:
    """Canonical basis (``f = e1``, ``t = e2``) or a seeded random one.

    Random bases draw two Gaussian vectors, redraw while they are nearly
    collinear, and orthonormalize by Gram-Schmidt.
    """
    if not isinstance(d, (int, np.integer)) or d < 2 or d > MAX_DIM:
        raise InvalidDimension(d, f"dimension must be an integer in [2, {MAX_DIM}], got {d!r}")
    if mode == "canonical":
        eye = np.eye(d)
        return Basis(eye[0], eye[1])
    if mode != "random":
        raise ValueError(f"unknown basis mode {mode!r}")
    if seed is None:
        raise ValueError("a random basis needs an explicit seed")
    rng = np.random.default_rng(seed)
    while True:
        a, b = rng.standard_normal((2, d))
        a /= np.linalg.norm(a)
        b /= np.linalg.norm(b)
        if abs(a @ b) <= COLLINEAR_COS:
            break
    b -= (a @ b) * a
    b /= np.linalg.norm(b)
    # a second pass removes the rounding left by the first
    b -= (a @ b) * a
    b /= np.linalg.norm(b)
    return Basis(a, b)


def kron(a, b) -> np.ndarray:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``.

    One-dimensional inputs are treated as column vectors and the product of
    two of them is returned one-dimensional.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    vectors = a.ndim == 1 and b.ndim == 1
    a2 = a.reshape(-1, 1) if a.ndim == 1 else a
    b2 = b.reshape(-1, 1) if b.ndim == 1 else b
    (m, n), (p, q) = a2.shape, b2.shape
    out = (a2[:, None, :, None] * b2[None, :, None, :]).reshape(m * p, n * q)
    return out.ravel() if vectors else out


# output truth value for each input pattern, as outer-product terms
CONNECTIVES = {
    "N": {("f",): "t", ("t",): "f"},
    "C": {("t", "t"): "t", ("t", "f"): "f", ("f", "t"): "t", ("f", "f"): "t"},
    "K": {("t", "t"): "t", ("t", "f"): "f", ("f", "t"): "f", ("f", "f"): "f"},
    "A": {("t", "t"): "t", ("t", "f"): "t", ("f", "t"): "t", ("f", "f"): "f"},
}


@dataclass(frozen=True, eq=False)
class TruthVector:
    components: np.ndarray
    basis: Basis

    @property
    def weight(self) -> float:
        """Coefficient on ``t``."""
        return float(self.basis.t @ self.components)

    @property
    def false_weight(self) -> float:
        return float(self.basis.f @ self.components)


@dataclass(frozen=True, eq=False)
class LogicMatrix:
    symbol: str
    entries: np.ndarray
    basis: Basis

    @property
    def arity(self) -> int:
        return len(next(iter(CONNECTIVES[self.symbol])))

    def apply(self, *args) -> TruthVector:
        """Apply to one vector (negation) or to the Kronecker pair of two."""
        if len(args) != self.arity:
            raise TypeError(f"{self.symbol} takes {self.arity} argument(s), got {len(args)}")
        parts = []
        for v in args:
            if isinstance(v, TruthVector):
                if not v.basis.same_as(self.basis):
                    raise BasisMismatch(f"operand of {self.symbol} uses a different basis")
                v = v.components
            parts.append(np.asarray(v, dtype=float))
        x = parts[0] if len(parts) == 1 else kron(parts[0], parts[1])
        return TruthVector(self.entries @ x, self.basis)


def build_matrix(symbol: str, basis: Basis) -> LogicMatrix:
    """Sum of outer products ``out (x ⊗ y)ᵀ`` over the connective's table.

    For instance ``N = f tᵀ + t fᵀ`` and
    ``C = t(t⊗t)ᵀ + f(t⊗f)ᵀ + t(f⊗t)ᵀ + t(f⊗f)ᵀ``.
    """
    try:
        table = CONNECTIVES[symbol]
    except KeyError:
        raise UnsupportedOperator(symbol, "matrix") from None
    vec = {"f": basis.f, "t": basis.t}
    entries = np.zeros((basis.d, basis.d ** len(next(iter(table)))))
    for inputs, out in table.items():
        x = vec[inputs[0]]
        for name in inputs[1:]:
            x = kron(x, vec[name])
        entries += np.outer(vec[out], x)
    entries.flags.writeable = False
    return LogicMatrix(symbol, entries, basis)


def _weight(value, name: str | None = None) -> float:
    if isinstance(value, Tri):
        return float(value)
    try:
        w = float(value)
    except (TypeError, ValueError):
        raise WeightOutOfRange(value) from None
    if not 0.0 <= w <= 1.0:  # also rejects nan
        raise WeightOutOfRange(value)
    return w


def vectorize(alpha, basis: Basis) -> TruthVector:
    """``α t + (1 - α) f``; α = ½ gives the uncertain vector ``i``."""
    a = _weight(alpha)
    return TruthVector(a * basis.t + (1.0 - a) * basis.f, basis)


def decode(v, basis: Basis | None = None) -> float:
    """Weight ``<t, v>`` of a vector lying in span{f, t}."""
    if isinstance(v, TruthVector):
        if basis is not None and not basis.same_as(v.basis):
            raise BasisMismatch("vector and basis differ")
        basis, x = v.basis, v.components
    else:
        if basis is None:
            raise TypeError("decoding a raw array needs a basis")
        x = np.asarray(v, dtype=float)
    beta = basis.t @ x
    gamma = basis.f @ x
    residual = float(np.linalg.norm(x - beta * basis.t - gamma * basis.f))
    if residual > SPAN_TOL:
        raise OutOfSpan(residual)
    return float(beta)


def eval_matrix(formula: Formula, assignment: Mapping[str, object], basis: Basis) -> TruthVector:
    """Evaluate by matrix products: ``N·x`` for negation, ``M·(x ⊗ y)`` otherwise.

    Leaves are vectorized weights; the constants 0 and 1 become ``f`` and
    ``t``.  Every occurrence of a variable is a separate Kronecker factor,
    so repeated variables behave as independent under uncertainty.
    """
    weights: dict[str, float] = {}

    def leaf(f):
        if isinstance(f, Const):
            return basis.t if f.value else basis.f
        if f.name not in weights:
            try:
                weights[f.name] = _weight(assignment[f.name])
            except KeyError:
                raise MissingVariable(f.name) from None
        a = weights[f.name]
        return a * basis.t + (1.0 - a) * basis.f

    def node(symbol, args):
        m = basis.matrix(symbol)
        x = args[0] if len(args) == 1 else kron(args[0], args[1])
        return m.entries @ x

    return TruthVector(fold(formula, leaf, node), basis)


PROJECTIONS = {
    "N": lambda a: 1.0 - a,
    "C": lambda a, b: 1.0 - a * (1.0 - b),
    "K": lambda a, b: a * b,
    "A": lambda a, b: a + b - a * b,
}


def eval_projection(formula: Formula, assignment: Mapping[str, object]) -> float:
    """Weight on ``t`` computed from the scalar projection formulas alone."""

    def leaf(f):
        if isinstance(f, Const):
            return float(f.value)
        try:
            return _weight(assignment[f.name])
        except KeyError:
            raise MissingVariable(f.name) from None

    def node(symbol, args):
        try:
            return PROJECTIONS[symbol](*args)
        except KeyError:
            raise UnsupportedOperator(symbol, "projection") from None

    return fold(formula, leaf, node)


# Published weights on t for the uncertain-argument matrix results.  The
# A(i, i) entry was printed as (3/4)f + (1/4)t; the matrix product and the
# disjunction projection both give (1/4)f + (3/4)t.
REFERENCE_UNCERTAIN_RESULTS: dict[str, dict[tuple[Tri, ...], Fraction]] = {
    "N": {(HALF,): Fraction(1, 2)},
    "C": {
        (ONE, HALF): Fraction(1, 2), (HALF, ONE): Fraction(1),
        (ZERO, HALF): Fraction(1), (HALF, ZERO): Fraction(1, 2),
        (HALF, HALF): Fraction(3, 4),
    },
    "K": {
        (ONE, HALF): Fraction(1, 2), (HALF, ONE): Fraction(1, 2),
        (ZERO, HALF): Fraction(0), (HALF, ZERO): Fraction(0),
        (HALF, HALF): Fraction(1, 4),
    },
    "A": {
        (ONE, HALF): Fraction(1), (HALF, ONE): Fraction(1),
        (ZERO, HALF): Fraction(1, 2), (HALF, ZERO): Fraction(1, 2),
        (HALF, HALF): Fraction(1, 4),
    },
}


@dataclass(frozen=True)
class Discrepancy:
    assignment: dict
    lukasiewicz: Tri
    projection: float


@dataclass(frozen=True)
class Erratum:
    arguments: tuple[Tri, ...]
    published: Fraction
    computed: float


@dataclass(frozen=True)
class DiscrepancyReport:
    symbol: str
    discrepancies: tuple[Discrepancy, ...]
    errata: tuple[Erratum, ...]


def diff_lukasiewicz_projection(formula: Formula, limit: int = 10, tol: float = 1e-9) -> list[Discrepancy]:
    """Cells of the {0, ½, 1} grid where Łukasiewicz and projection disagree."""
    out = []
    for _, env in _assignments(free_variables(formula), limit):
        luk = eval3_lukasiewicz(formula, env)
        proj = eval_projection(formula, env)
        if not math.isclose(float(luk), proj, rel_tol=0.0, abs_tol=tol):
            out.append(Discrepancy(env, luk, proj))
    return out


def compare_with_lukasiewicz(symbol: str) -> DiscrepancyReport:
    """Compare one connective's projection with its Łukasiewicz table.

    The report also lists every published uncertain-argument result that the
    projection formula does not reproduce.
    """
    if symbol not in CONNECTIVES:
        raise UnsupportedOperator(symbol, "matrix")
    names = "pq"[: len(next(iter(CONNECTIVES[symbol])))]
    formula = parse_formula(symbol + names)
    found = tuple(diff_lukasiewicz_projection(formula))
    errata = []
    for args, published in REFERENCE_UNCERTAIN_RESULTS[symbol].items():
        computed = eval_projection(formula, dict(zip(names, args)))
        if not math.isclose(float(published), computed, abs_tol=1e-12):
            errata.append(Erratum(args, published, computed))
    return DiscrepancyReport(symbol, found, tuple(errata))


def dump_matrix(entries: Sequence[Sequence[float]] | np.ndarray | LogicMatrix) -> str:
    """Row-major text, one row per line, 17 significant digits per entry."""
    if isinstance(entries, LogicMatrix):
        entries = entries.entries
    rows = np.atleast_2d(np.asarray(entries, dtype=float))
    return "\n".join(" ".join(f"{x + 0.0:.17g}" for x in row) for row in rows)
