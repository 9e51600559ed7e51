"""
=========================================
Classical, Łukasiewicz and Kleene tables
=========================================

Truth tables under the two-valued reading, then under two three-valued
extensions that differ only in what an implication between two unknowns
is worth.
"""

# %%
# Two values
# ----------
from polishlogic import parse_formula
from polishlogic.classical import are_equivalent, is_tautology, truth_table
from polishlogic.trivalent import diff_semantics, trivalent_table

for text in ["Cpq", "ANpq", "NKpNp"]:
    t = truth_table(parse_formula(text))
    print(text, [f"{''.join(map(str, v))}->{r}" for v, r in t.rows], "tautology" if is_tautology(parse_formula(text)) else "")

print("Kpq == NANpNq:", are_equivalent(parse_formula("Kpq"), parse_formula("NANpNq")))

# %%
# Three values
# ------------
# Excluded middle is no longer a law once ½ is allowed.
for semantics in ("lukasiewicz", "kleene"):
    t = trivalent_table(parse_formula("ApNp"), semantics)
    print(semantics, " ".join(f"{v[0]}->{r}" for v, r in t.rows))

# %%
# Where the two systems part ways
# -------------------------------
for text in ["Cpq", "CpCqp", "Kpq"]:
    rows = diff_semantics(parse_formula(text))
    print(text, [(", ".join(f"{k}={v}" for k, v in d.assignment.items()), str(d.lukasiewicz), str(d.kleene)) for d in rows])
