"""Polish-notation formulas under classical, three-valued and matrix-vector semantics."""

from .classical import are_equivalent, eval2, is_tautology, truth_table
from .errors import (
    BasisMismatch,
    InvalidDimension,
    InvalidValue,
    LogicError,
    MissingVariable,
    OutOfSpan,
    ParseError,
    TooManyVariables,
    UnsupportedOperator,
    WeightOutOfRange,
)
from .syntax import (
    DEFAULT_TABLE,
    Atom,
    Const,
    Formula,
    Op,
    OperatorTable,
    free_variables,
    is_well_formed,
    parse,
    parse_formula,
    to_infix,
    to_polish,
    tokenize,
)
from .trivalent import Tri, diff_semantics, eval3_kleene, eval3_lukasiewicz, trivalent_table
from .vector import (
    Basis,
    LogicMatrix,
    TruthVector,
    build_matrix,
    compare_with_lukasiewicz,
    decode,
    eval_matrix,
    eval_projection,
    kron,
    make_basis,
    vectorize,
)

__version__ = "0.1.0"
