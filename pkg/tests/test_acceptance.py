"""Exit criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per
criterion in the terminal summary.
"""

import itertools
import json
import random

import numpy as np
import pytest

from formula_strategies import GRID, depth_three_witnesses
from polishlogic import ParseError, parse_formula
from polishlogic.classical import are_equivalent, eval2, is_tautology
from polishlogic.cli import main
from polishlogic.syntax import enumerate_formulas, is_well_formed, random_formula, tokenize
from polishlogic.trivalent import Tri, diff_semantics, eval3_lukasiewicz
from polishlogic.vector import (
    compare_with_lukasiewicz,
    decode,
    eval_matrix,
    eval_projection,
    kron,
    make_basis,
    vectorize,
)

P = parse_formula
CANON = make_basis(2)
ONE, HALF, ZERO = Tri.TRUE, Tri.HALF, Tri.FALSE
EXACT = 1e-12
LOOSE = 1e-9


@pytest.mark.criterion("1. classical connective tables")
def test_classical_tables():
    entries = {
        "Np": [((0,), 1), ((1,), 0)],
        "Cpq": [((1, 1), 1), ((0, 1), 1), ((0, 0), 1), ((1, 0), 0)],
        "Kpq": [((1, 1), 1), ((1, 0), 0), ((0, 1), 0), ((0, 0), 0)],
        "Apq": [((1, 1), 1), ((1, 0), 1), ((0, 1), 1), ((0, 0), 0)],
    }
    checked = 0
    for text, rows in entries.items():
        for args, expected in rows:
            assert eval2(P(text), dict(zip("pq", args))) == expected, (text, args)
            # the same entry as a closed formula over constants
            closed = text[0] + "".join(map(str, args))
            assert eval2(P(closed), {}) == expected
            checked += 1
    assert checked == 14


@pytest.mark.criterion("2. named laws are tautologies; CKCpqq is ill-formed")
def test_named_laws():
    for text in ("NKpNp", "ApNp", "CCpKqNqNp", "CKCpqpq"):
        assert is_tautology(P(text)), text
    assert not is_well_formed(tokenize("CKCpqq")).ok
    with pytest.raises(ParseError):
        P("CKCpqq")


@pytest.mark.criterion("3. De Morgan and implication identities, scalar and matrix")
def test_identities():
    pairs = [("Kpq", "NANpNq"), ("Apq", "NKNpNq"), ("Cpq", "ANpq")]
    for f, g in pairs:
        assert are_equivalent(P(f), P(g))
    for f, g in pairs:
        for x, y in itertools.product((0, 1), repeat=2):
            env = {"p": x, "q": y}
            lhs = eval_matrix(P(f), env, CANON).components
            rhs = eval_matrix(P(g), env, CANON).components
            np.testing.assert_allclose(lhs, rhs, rtol=0, atol=EXACT)
    for basis in (CANON, make_basis(5, "random", 3)):
        for f, g in pairs:
            for x, y in itertools.product(GRID, repeat=2):
                env = {"p": x, "q": y}
                lhs = eval_matrix(P(f), env, basis).components
                rhs = eval_matrix(P(g), env, basis).components
                np.testing.assert_allclose(lhs, rhs, rtol=0, atol=LOOSE)


@pytest.mark.criterion("4. Lukasiewicz three-valued extension entries (16)")
def test_trivalent_entries():
    entries = [
        ("N", (HALF,), HALF),
        ("C", (ONE, HALF), HALF), ("C", (HALF, ONE), ONE),
        ("C", (ZERO, HALF), ONE), ("C", (HALF, ZERO), HALF),
        ("C", (HALF, HALF), ONE),
        ("K", (ONE, HALF), HALF), ("K", (HALF, ONE), HALF),
        ("K", (ZERO, HALF), ZERO), ("K", (HALF, ZERO), ZERO),
        ("K", (HALF, HALF), HALF),
        ("A", (ONE, HALF), ONE), ("A", (HALF, ONE), ONE),
        ("A", (ZERO, HALF), HALF), ("A", (HALF, ZERO), HALF),
        ("A", (HALF, HALF), HALF),
    ]
    assert len(entries) == 16
    for symbol, args, expected in entries:
        names = "pq"[: len(args)]
        f = P(symbol + names)
        assert eval3_lukasiewicz(f, dict(zip(names, args))) is expected, (symbol, args)


@pytest.mark.criterion("5. matrix results on the uncertain vector i (canonical d=2)")
def test_uncertain_vectors():
    f, t, i = CANON.f, CANON.t, vectorize(0.5, CANON).components
    w = {"f": 0.0, "t": 1.0, "i": 0.5}
    cases = [
        ("Np", ("i",), i),
        ("Cpq", ("t", "i"), i), ("Cpq", ("i", "t"), t),
        ("Cpq", ("f", "i"), t), ("Cpq", ("i", "f"), i),
        ("Cpq", ("i", "i"), np.array([0.25, 0.75])),
        ("Kpq", ("t", "i"), i), ("Kpq", ("i", "t"), i),
        ("Kpq", ("f", "i"), f), ("Kpq", ("i", "f"), f),
        ("Kpq", ("i", "i"), np.array([0.75, 0.25])),
        ("Apq", ("t", "i"), t), ("Apq", ("i", "t"), t),
        ("Apq", ("f", "i"), i), ("Apq", ("i", "f"), i),
        # follows the projection formula; the printed (3/4)f + (1/4)t is reported as an erratum
        ("Apq", ("i", "i"), np.array([0.25, 0.75])),
    ]
    for text, args, expected in cases:
        env = {name: w[a] for name, a in zip("pq", args)}
        got = eval_matrix(P(text), env, CANON).components
        np.testing.assert_allclose(got, expected, rtol=0, atol=EXACT, err_msg=f"{text} {args}")
    errata = compare_with_lukasiewicz("A").errata
    assert [(e.arguments, float(e.published)) for e in errata] == [((HALF, HALF), 0.25)]


@pytest.mark.criterion("6. projection formulas match decoded matrix evaluation (200 cases)")
def test_projection_matches_matrix():
    rng = random.Random(6)
    for _ in range(200):
        f = random_formula(rng, 3)
        env = {"p": rng.choice(GRID), "q": rng.choice(GRID)}
        assert abs(eval_projection(f, env) - decode(eval_matrix(f, env, CANON))) <= LOOSE, (str(f), env)


def _binary_table(f):
    return tuple(eval2(f, dict(zip("pq", r))) for r in itertools.product((0, 1), repeat=2))


def _agrees(f):
    for row in itertools.product((0, 1), repeat=2):
        env = dict(zip("pq", row))
        if abs(decode(eval_matrix(f, env, CANON)) - eval2(f, env)) > EXACT:
            return False
    return True


@pytest.mark.criterion("7. matrix evaluation equals classical on all depth<=3 formulas over {p,q}")
def test_binary_oracle_equivalence():
    # depth <= 2: every formula, directly
    base = enumerate_formulas(2)
    assert len(base) == 786
    assert all(_agrees(f) for f in base)
    # depth 3: one witness per (operator, child table, child table); see depth_three_witnesses
    witnesses, covered = depth_three_witnesses(_binary_table)
    # N over the 770 depth-2 formulas, dyadic pairs with at least one depth-2 child
    assert covered == 770 + 3 * (786**2 - 16**2) == 1_853_390
    assert len(witnesses) < 1000
    assert all(_agrees(f) for f in witnesses)
    # plus a direct random sample of depth-3 formulas
    rng = random.Random(7)
    assert all(_agrees(random_formula(rng, 3, leaf_probability=0.0)) for _ in range(2000))


@pytest.mark.criterion("8. Kronecker transpose and mixed-product identities (20 trials)")
def test_kronecker_identities():
    rng = np.random.default_rng(8)
    for _ in range(20):
        m, n, p, q, r, s = rng.integers(1, 5, size=6)
        u, v = rng.standard_normal((m, n)), rng.standard_normal((p, q))
        w, x = rng.standard_normal((n, r)), rng.standard_normal((q, s))
        np.testing.assert_allclose(kron(u, v).T, kron(u.T, v.T), rtol=0, atol=1e-10)
        np.testing.assert_allclose(kron(u, v) @ kron(w, x), kron(u @ w, v @ x), rtol=0, atol=1e-10)


@pytest.mark.criterion("9. decoded weights are basis invariant (20 cases)")
def test_basis_invariance():
    rng = random.Random(9)
    bases = [CANON, make_basis(3, "random", 30), make_basis(5, "random", 50)]
    for _ in range(20):
        f = random_formula(rng, 3)
        env = {"p": rng.choice(GRID), "q": rng.choice(GRID)}
        weights = [decode(eval_matrix(f, env, b)) for b in bases]
        assert max(weights) - min(weights) <= LOOSE, (str(f), env, weights)


@pytest.mark.criterion("10. trivalent divergence: Kleene and matrix comparisons")
def test_trivalent_divergence():
    d = diff_semantics(P("Cpq"))
    assert [(x.assignment, x.lukasiewicz, x.kleene) for x in d] == [({"p": HALF, "q": HALF}, ONE, HALF)]
    expected = {"N": None, "C": (ONE, 0.75), "K": (HALF, 0.25), "A": (HALF, 0.75)}
    for symbol, want in expected.items():
        report = compare_with_lukasiewicz(symbol)
        if want is None:
            assert report.discrepancies == ()
            continue
        assert len(report.discrepancies) == 1
        cell = report.discrepancies[0]
        assert set(cell.assignment.values()) == {HALF}
        assert cell.lukasiewicz is want[0]
        assert abs(cell.projection - want[1]) <= EXACT


CLI_CASES = [
    (["parse", "CCpKqNqNp"], 0, lambda r: r["results"]["infix"] == "((p → (q ∧ ¬q)) → ¬p)"),
    (["parse", "CKCpqq"], 2, lambda r: r["results"]["error"]["kind"] == "UnexpectedEnd"),
    (["parse", ""], 2, lambda r: r["results"]["error"] == {"kind": "UnexpectedEnd", "position": 0,
                                                             "message": "input ended inside a formula"}),
    (["table", "Cpq", "--logic", "lukasiewicz"], 0,
     lambda r: len(r["results"]["rows"]) == 9
     and {"assignment": {"p": 0.5, "q": 0.5}, "value": 1} in r["results"]["rows"]),
    (["table", "Cpq", "--logic", "matrix"], 0,
     lambda r: len(r["results"]["rows"]) == 9
     and {"assignment": {"p": 0.5, "q": 0.5}, "value": 0.75} in r["results"]["rows"]),
    (["table", "Np", "--logic", "classical"], 0, lambda r: len(r["results"]["rows"]) == 2),
    (["check", "ApNp", "--mode", "tautology"], 0, lambda r: r["results"]["verdict"] == "TAUTOLOGY"),
    (["check", "Apq", "--mode", "equiv", "NKNpNq"], 0, lambda r: r["results"]["verdict"] == "EQUIVALENT"),
    (["check", "Kpq", "--mode", "tautology"], 1,
     lambda r: r["results"]["verdict"] == "NOT TAUTOLOGY" and r["results"]["counterexample"] == {"p": 1, "q": 0}),
    (["eval", "Kpq", "--assign", "p=0.5,q=0.5", "--logic", "projection"], 0, lambda r: r["results"]["value"] == 0.25),
    (["eval", "Np", "--assign", "p=0.5", "--logic", "matrix", "--dim", "2"], 0,
     lambda r: r["results"]["vector"] == [0.5, 0.5] and r["results"]["weight"] == 0.5),
    (["eval", "Cpq", "--assign", "p=1,q=0", "--logic", "classical"], 0, lambda r: r["results"]["value"] == 0),
    (["diff", "Cpq", "--pair", "luk-kleene"], 0,
     lambda r: r["results"]["rows"] == [{"assignment": {"p": 0.5, "q": 0.5}, "lukasiewicz": 1, "kleene": 0.5}]),
    (["diff", "Apq", "--pair", "luk-matrix"], 0,
     lambda r: r["results"]["rows"] == [{"assignment": {"p": 0.5, "q": 0.5}, "lukasiewicz": 0.5, "matrix": 0.75}]),
    (["diff", "Np", "--pair", "luk-matrix"], 0, lambda r: r["results"]["rows"] == []),
    (["matrices", "--dim", "2", "--basis", "canonical", "--symbol", "N"], 0,
     lambda r: r["results"] == {"N": [[0.0, 1.0], [1.0, 0.0]]}),
    (["matrices", "--dim", "2", "--basis", "canonical", "--symbol", "K"], 0,
     lambda r: r["results"] == {"K": [[1.0, 1.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]]}),
]


@pytest.mark.criterion("11. CLI exit codes and machine-readable output")
def test_cli_contract(capsys):
    for argv, code, check in CLI_CASES:
        assert main(["--format", "json", *argv]) == code, argv
        out = capsys.readouterr().out
        assert check(json.loads(out)), argv
    assert main(["matrices", "--dim", "1"]) == 2
    assert main(["matrices", "--dim", "2", "--symbol", "N"]) == 0
    assert capsys.readouterr().out == "0 1\n1 0\n"
