"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from polishlogic.syntax import Atom, Const, Op

SYMBOLS = {"N": 1, "C": 2, "K": 2, "A": 2}


def formulas(variables="pq", constants=False, max_leaves=12):
    leaves = st.sampled_from([Atom(v) for v in variables])
    if constants:
        leaves = leaves | st.sampled_from([Const(0), Const(1)])

    def extend(children):
        unary = children.map(lambda c: Op("N", (c,)))
        binary = st.tuples(st.sampled_from("CKA"), children, children).map(lambda t: Op(t[0], (t[1], t[2])))
        return unary | binary

    return st.recursive(leaves, extend, max_leaves=max_leaves)


GRID = (0.0, 0.25, 0.5, 0.75, 1.0)


def depth_three_witnesses(classify):
    """One depth-3 formula per distinct (operator, child class, child class).

    Every formula of depth exactly 3 over {p, q} is an operator applied to
    children of depth <= 2, with at least one child at depth 2.  When
    ``classify`` captures everything an evaluator can observe about a
    depth-<=2 formula (checked separately and exhaustively), a compositional
    evaluator's value on a depth-3 formula depends only on the operator and
    the children's classes.  Returns the witnesses and the number of depth-3
    formulas they stand for.
    """
    from polishlogic.syntax import depth, enumerate_formulas

    base = enumerate_formulas(2)
    any_rep, deep_rep = {}, {}
    any_count, deep_count = {}, {}
    for f in base:
        c = classify(f)
        any_rep.setdefault(c, f)
        any_count[c] = any_count.get(c, 0) + 1
        if depth(f) == 2:
            deep_rep.setdefault(c, f)
            deep_count[c] = deep_count.get(c, 0) + 1
    witnesses = {}
    for c, g in deep_rep.items():
        witnesses[("N", c)] = Op("N", (g,))
    for s in "CKA":
        for cg, g in any_rep.items():
            for ch, h in deep_rep.items():
                witnesses.setdefault((s, cg, ch), Op(s, (g, h)))
        for cg, g in deep_rep.items():
            for ch, h in any_rep.items():
                witnesses.setdefault((s, cg, ch), Op(s, (g, h)))
    n_all, n_deep = len(base), sum(deep_count.values())
    covered = n_deep + 3 * (n_all**2 - (n_all - n_deep) ** 2)
    return list(witnesses.values()), covered
