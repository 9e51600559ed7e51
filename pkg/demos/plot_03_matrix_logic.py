"""
============================
Connectives as matrices
============================

Truth values become orthonormal vectors and connectives become matrices
built from outer products.  A dyadic matrix eats the Kronecker product of
its two inputs, so evaluating a formula applies matrices in exactly the
order the prefix string lists its operators.
"""

# %%
# The four matrices in the canonical basis
# ----------------------------------------
import matplotlib.pyplot as plt
import numpy as np

from polishlogic import parse_formula
from polishlogic.classical import eval2
from polishlogic.vector import decode, dump_matrix, eval_matrix, make_basis

basis = make_basis(2)
for symbol in "NCKA":
    print(f"{symbol}:\n{dump_matrix(basis.matrix(symbol))}\n")

# %%
# Classical behaviour on f and t
# ------------------------------
f = parse_formula("CCpKqNqNp")
for p in (0, 1):
    for q in (0, 1):
        env = {"p": p, "q": q}
        print(env, "matrix:", decode(eval_matrix(f, env, basis)), "classical:", eval2(f, env))

# %%
# The basis does not matter
# -------------------------
# A random orthonormal pair in R^5 gives the same decoded weights.
random_basis = make_basis(5, "random", seed=7)
env = {"p": 0.3, "q": 0.8}
print(decode(eval_matrix(f, env, basis)), decode(eval_matrix(f, env, random_basis)))

# %%
# Picture of the implication matrix in R^5
# ----------------------------------------
fig, axes = plt.subplots(1, 2, figsize=(9, 3))
axes[0].imshow(basis.matrix("C").entries, cmap="coolwarm")
axes[0].set_title("C, canonical d=2")
axes[1].imshow(random_basis.matrix("C").entries, cmap="coolwarm", aspect="auto")
axes[1].set_title("C, random d=5")
for ax in axes:
    ax.set_xticks([])
    ax.set_yticks([])
fig.tight_layout()
plt.show()
