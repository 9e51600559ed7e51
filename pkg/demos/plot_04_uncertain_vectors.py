"""
=================================================
Uncertain inputs: matrices versus three values
=================================================

The vector ``i = ½f + ½t`` plays the part of the unknown value.  Linearity
means the matrices answer with mixtures, and the weight on ``t`` follows
simple closed forms in the input weights.  Those agree with the Łukasiewicz
table everywhere except when both arguments are unknown.
"""

# %%
# Results on i
# ------------
import matplotlib.pyplot as plt
import numpy as np

from polishlogic import parse_formula
from polishlogic.trivalent import Tri, eval3_kleene, eval3_lukasiewicz
from polishlogic.vector import compare_with_lukasiewicz, decode, eval_matrix, eval_projection, make_basis

basis = make_basis(2)
for text in ["Np", "Cpq", "Kpq", "Apq"]:
    env = {"p": 0.5, "q": 0.5}
    v = eval_matrix(parse_formula(text), env, basis)
    print(f"{text:4s} on i: {v.false_weight:.2f} f + {v.weight:.2f} t")

# %%
# Discrepancy reports
# -------------------
# The published disjunction result for (i, i) does not survive the explicit
# matrix product; the report lists it next to the computed value.
for symbol in "NCKA":
    r = compare_with_lukasiewicz(symbol)
    cells = [(str(d.lukasiewicz), d.projection) for d in r.discrepancies]
    print(symbol, "discrepancies:", cells, "errata:", [(float(e.published), e.computed) for e in r.errata])

# %%
# Implication as a midpoint
# -------------------------
env = {"p": Tri.HALF, "q": Tri.HALF}
cpq = parse_formula("Cpq")
print("Lukasiewicz", eval3_lukasiewicz(cpq, env), "Kleene", eval3_kleene(cpq, env), "matrix", eval_projection(cpq, env))

# %%
# Repeated variables are independent
# ----------------------------------
# Each occurrence is its own Kronecker factor, so ``KpNp`` at p = ½ is ¼, not 0.
print(eval_projection(parse_formula("KpNp"), {"p": 0.5}))

# %%
# The implication surface
# -----------------------
a = np.linspace(0, 1, 41)
grid = np.array([[decode(eval_matrix(cpq, {"p": x, "q": y}, basis)) for y in a] for x in a])
plt.imshow(grid, origin="lower", extent=(0, 1, 0, 1), cmap="viridis")
plt.colorbar(label="weight on t")
plt.xlabel("weight of q")
plt.ylabel("weight of p")
plt.title("C(u ⊗ v)")
plt.show()
