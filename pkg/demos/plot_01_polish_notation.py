"""
=====================================
Reading formulas without parentheses
=====================================

Prefix notation needs no brackets: each operator announces how many operands
follow, so a left-to-right scan fixes the tree.  This script parses a few
classic laws, prints them in infix, and shows how the arity count rejects a
string that is one operand short.
"""

# %%
# Parsing and printing
# --------------------
from polishlogic import ParseError, free_variables, parse_formula, to_infix, to_polish
from polishlogic.syntax import OperatorTable, is_well_formed, tokenize

laws = {
    "non-contradiction": "NKpNp",
    "excluded middle": "ApNp",
    "reduction to absurdity": "CCpKqNqNp",
    "hypothetical syllogism": "CKCpqpq",
}
for name, text in laws.items():
    f = parse_formula(text)
    print(f"{name:24s} {to_polish(f):10s} {to_infix(f):28s} vars={free_variables(f)}")

# %%
# The arity count
# ---------------
# Start owing one formula; an atom pays one, an operator of arity k turns one
# debt into k.  ``CKCpqq`` has three dyadic operators but only three atoms.
for text in ["CKCpqpq", "CKCpqq", "Kpqr"]:
    verdict = is_well_formed(tokenize(text))
    try:
        parse_formula(text)
        outcome = "parses"
    except ParseError as err:
        outcome = f"{err.kind} at {err.position}"
    print(f"{text:8s} well-formed={verdict.ok!s:5s} {outcome}")

# %%
# Any arity table
# ---------------
# The same machinery handles arithmetic: ``+a+bc`` and ``++abc`` are two
# different trees that happen to have equal values.
plus = OperatorTable({"+": 2})
for text in ["+a+bc", "++abc"]:
    print(text, "->", to_infix(parse_formula(text, plus)))
