"""Command-line front end.

Subcommands: parse, table, check, eval, diff, matrices.  ``--format``
chooses text, csv or json; ``--quiet`` suppresses stdout.  Exit status is 0
on success, 1 when a check verdict is negative, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from fractions import Fraction

from . import classical, trivalent, vector
from .errors import InvalidValue, LogicError, ParseError, TooManyVariables
from .syntax import Op, free_variables, parse_formula, to_infix, to_polish
from .trivalent import Tri

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2

DIFF_VARIABLE_LIMIT = 6
GRID_VARIABLE_LIMIT = 10


class UsageError(Exception):
    pass


# -- value rendering ---------------------------------------------------------

def machine_value(v):
    """JSON-ready scalar: Tri becomes 0, 0.5 or 1."""
    if isinstance(v, Tri):
        return int(v.value) if v.value.denominator == 1 else float(v.value)
    return v


def text_value(v) -> str:
    if isinstance(v, Tri):
        return str(v)
    if isinstance(v, float):
        return f"{v + 0.0:.12g}"
    return str(v)


def csv_value(v) -> str:
    v = machine_value(v)
    return repr(v) if isinstance(v, float) else str(v)


def assignment_text(env: dict) -> str:
    return ",".join(f"{k}={text_value(v)}" for k, v in env.items())


# -- argument helpers ----------------------------------------------------------

def parse_assignments(spec: str | None) -> dict[str, str]:
    env: dict[str, str] = {}
    if not spec:
        return env
    for item in spec.split(","):
        name, sep, value = item.partition("=")
        name, value = name.strip(), value.strip()
        if not sep or len(name) != 1 or not name.islower() or not value:
            raise UsageError(f"bad assignment {item!r}; expected name=value")
        env[name] = value
    return env


def number(text: str) -> float:
    if text.strip() == "½":
        return 0.5
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a number: {text!r}") from None


def coerce(env: dict[str, str], logic: str) -> dict:
    out = {}
    for name, raw in env.items():
        if logic == "classical":
            if raw not in ("0", "1"):
                raise UsageError(f"classical value of {name} must be 0 or 1, got {raw!r}")
            out[name] = int(raw)
        elif logic in ("lukasiewicz", "kleene"):
            try:
                out[name] = trivalent.to_tri(raw)
            except InvalidValue as exc:
                raise UsageError(str(exc)) from None
        else:
            w = number(raw)
            if not 0.0 <= w <= 1.0:
                raise UsageError(f"weight of {name} must lie in [0, 1], got {raw!r}")
            out[name] = w
    return out


def basis_from(spec: str, d: int) -> vector.Basis:
    if spec == "canonical":
        return vector.make_basis(d)
    mode, _, seed = spec.partition(":")
    if mode != "random":
        raise UsageError(f"unknown basis {spec!r}; use canonical or random:<seed>")
    if not seed:
        raise UsageError("random basis needs an explicit seed, e.g. random:7")
    try:
        return vector.make_basis(d, "random", int(seed))
    except ValueError:
        raise UsageError(f"bad seed {seed!r}") from None


def parse_grid(spec: str | None) -> list[float]:
    if spec is None:
        return [1.0, 0.5, 0.0]
    grid = [number(x) for x in spec.split(",") if x.strip()]
    if not grid or any(not 0.0 <= w <= 1.0 for w in grid):
        raise UsageError("grid weights must be a non-empty comma list in [0, 1]")
    return grid


# -- output ----------------------------------------------------------------

class Output:
    def __init__(self, fmt: str, quiet: bool, stream=None):
        self.fmt = fmt
        self.quiet = quiet
        self.stream = stream or sys.stdout

    def emit(self, record: dict, text: str, csv_rows: list[list] | None = None):
        if self.quiet:
            return
        if self.fmt == "json":
            self.stream.write(json.dumps(record, ensure_ascii=False) + "\n")
        elif self.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            for row in csv_rows or []:
                writer.writerow([csv_value(v) for v in row])
            self.stream.write(buf.getvalue())
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def record(command, formula, semantics, results) -> dict:
    return {"command": command, "formula": formula, "semantics": semantics, "results": results}


def tree_lines(formula) -> list[str]:
    lines = []
    work = [(formula, 0)]
    while work:
        f, level = work.pop()
        lines.append("  " * level + to_polish(f)[0])
        if isinstance(f, Op):
            work.extend((c, level + 1) for c in reversed(f.children))
    return lines


def caret(expr: str, err: ParseError) -> str:
    return f"error: {err.kind} at position {err.position}: {err.message}\n  {expr}\n  {' ' * err.position}^"


# -- subcommands -------------------------------------------------------------

def cmd_parse(args, out: Output) -> int:
    try:
        f = parse_formula(args.expr)
    except ParseError as err:
        error = {"kind": err.kind, "position": err.position, "message": err.message}
        out.emit(
            record("parse", args.expr, None, {"valid": False, "error": error}),
            "invalid",
            [["valid", "kind", "position"], ["false", err.kind, err.position]],
        )
        print(caret(args.expr, err), file=sys.stderr)
        return EXIT_USAGE
    variables = free_variables(f)
    results = {
        "valid": True,
        "polish": to_polish(f),
        "infix": to_infix(f),
        "variables": variables,
        "tree": tree_lines(f),
    }
    text = "\n".join(
        [
            "valid",
            f"polish:    {results['polish']}",
            f"infix:     {results['infix']}",
            f"variables: {', '.join(variables) if variables else '(none)'}",
            "tree:",
            *("  " + line for line in results["tree"]),
        ]
    )
    rows = [["valid", "polish", "infix", "variables"], ["true", results["polish"], results["infix"], " ".join(variables)]]
    out.emit(record("parse", args.expr, None, results), text, rows)
    return EXIT_OK


def table_rows(f, logic: str, grid: list[float]):
    variables = free_variables(f)
    if logic == "classical":
        t = classical.truth_table(f)
        return variables, [(dict(zip(t.variables, vals)), v) for vals, v in t.rows]
    if logic in ("lukasiewicz", "kleene"):
        t = trivalent.trivalent_table(f, logic)
        return variables, [(dict(zip(t.variables, vals)), v) for vals, v in t.rows]
    if len(variables) > GRID_VARIABLE_LIMIT:
        raise TooManyVariables(len(variables), GRID_VARIABLE_LIMIT)
    basis = vector.make_basis(2)
    rows = []
    for values in itertools.product(grid, repeat=len(variables)):
        env = dict(zip(variables, values))
        rows.append((env, vector.decode(vector.eval_matrix(f, env, basis))))
    return variables, rows


def cmd_table(args, out: Output) -> int:
    f = parse_formula(args.expr)
    if args.grid is not None and args.logic != "matrix":
        raise UsageError("--grid applies to --logic matrix only")
    variables, rows = table_rows(f, args.logic, parse_grid(args.grid))
    results = {
        "variables": variables,
        "rows": [
            {"assignment": {k: machine_value(v) for k, v in env.items()}, "value": machine_value(value)}
            for env, value in rows
        ],
    }
    header = " ".join(variables) + (" | " if variables else "| ") + to_polish(f)
    lines = [header]
    for env, value in rows:
        cells = " ".join(text_value(v) for v in env.values())
        lines.append(f"{cells}{' | ' if cells else '| '}{text_value(value)}")
    csv_rows = [[*variables, "value"]] + [[*env.values(), value] for env, value in rows]
    out.emit(record("table", to_polish(f), args.logic, results), "\n".join(lines), csv_rows)
    return EXIT_OK


def cmd_check(args, out: Output) -> int:
    mode = args.mode
    f = parse_formula(args.expr)
    if mode[0] == "tautology" and len(mode) == 1:
        counter = classical.find_counterexample(f)
        verdict = "TAUTOLOGY" if counter is None else "NOT TAUTOLOGY"
        other = None
    elif mode[0] == "equiv" and len(mode) == 2:
        try:
            g = parse_formula(mode[1])
        except ParseError as err:
            err.source = mode[1]
            raise
        other = to_polish(g)
        counter = classical.equivalence_counterexample(f, g)
        verdict = "EQUIVALENT" if counter is None else "NOT EQUIVALENT"
    else:
        raise UsageError("--mode takes 'tautology' or 'equiv <expr2>'")
    results = {"mode": mode[0], "verdict": verdict, "holds": counter is None, "counterexample": counter}
    if other is not None:
        results["other"] = other
    text = verdict if counter is None else f"{verdict}\ncounterexample: {assignment_text(counter)}"
    csv_rows = [["verdict", "counterexample"], [verdict, assignment_text(counter) if counter else ""]]
    out.emit(record("check", to_polish(f), "classical", results), text, csv_rows)
    return EXIT_OK if counter is None else EXIT_FALSE


def cmd_eval(args, out: Output) -> int:
    f = parse_formula(args.expr)
    logic = args.logic
    env = coerce(parse_assignments(args.assign), logic)
    if logic == "classical":
        value = classical.eval2(f, env)
    elif logic in ("lukasiewicz", "kleene"):
        value = trivalent.eval3(f, env, logic)
    elif logic == "projection":
        value = vector.eval_projection(f, env)
    else:
        basis = basis_from(args.basis, args.dim)
        v = vector.eval_matrix(f, env, basis)
        weight = vector.decode(v)
        comps = [float(x) for x in v.components]
        results = {"vector": comps, "weight": weight, "dim": args.dim, "basis": args.basis}
        text = f"vector: {' '.join(text_value(x) for x in comps)}\nweight: {text_value(weight)}"
        csv_rows = [["weight", *(f"v{i}" for i in range(len(comps)))], [weight, *comps]]
        out.emit(record("eval", to_polish(f), logic, results), text, csv_rows)
        return EXIT_OK
    results = {"value": machine_value(value)}
    out.emit(record("eval", to_polish(f), logic, results), text_value(value), [["value"], [value]])
    return EXIT_OK


def cmd_diff(args, out: Output) -> int:
    f = parse_formula(args.expr)
    if args.pair == "luk-kleene":
        other = "kleene"
        found = [(d.assignment, d.lukasiewicz, d.kleene) for d in trivalent.diff_semantics(f, DIFF_VARIABLE_LIMIT)]
    else:
        other = "matrix"
        found = [
            (d.assignment, d.lukasiewicz, d.projection)
            for d in vector.diff_lukasiewicz_projection(f, DIFF_VARIABLE_LIMIT)
        ]
    variables = free_variables(f)
    results = {
        "pair": args.pair,
        "rows": [
            {
                "assignment": {k: machine_value(v) for k, v in env.items()},
                "lukasiewicz": machine_value(a),
                other: machine_value(b),
            }
            for env, a, b in found
        ],
    }
    lines = [f"{assignment_text(env)}: lukasiewicz {text_value(a)}, {other} {text_value(b)}" for env, a, b in found]
    text = "\n".join(lines) if lines else "no disagreements"
    csv_rows = [[*variables, "lukasiewicz", other]] + [[*env.values(), a, b] for env, a, b in found]
    out.emit(record("diff", to_polish(f), args.pair, results), text, csv_rows)
    return EXIT_OK


def cmd_matrices(args, out: Output) -> int:
    if args.dim < 2 or args.dim > vector.MAX_DIM:
        raise UsageError(f"--dim must lie in [2, {vector.MAX_DIM}], got {args.dim}")
    basis = basis_from(args.basis, args.dim)
    symbols = list("NCKA") if args.symbol == "all" else [args.symbol]
    mats = {s: basis.matrix(s) for s in symbols}
    results = {s: m.entries.tolist() for s, m in mats.items()}
    if len(symbols) == 1:
        text = vector.dump_matrix(mats[symbols[0]])
    else:
        blocks = [f"# {s} {m.entries.shape[0]}x{m.entries.shape[1]}\n{vector.dump_matrix(m)}" for s, m in mats.items()]
        text = "\n\n".join(blocks)
    csv_rows = [["symbol", "row", "col", "value"]] + [
        [s, i, j, float(x)] for s, m in mats.items() for (i, j), x in _indexed(m.entries)
    ]
    out.emit(record("matrices", None, args.basis, results), text, csv_rows)
    return EXIT_OK


def _indexed(a):
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            yield (i, j), x


# -- parser ------------------------------------------------------------------

LOGICS = ["classical", "lukasiewicz", "kleene", "matrix"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="polishlogic", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--quiet", action="store_true", default=False)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("parse", parents=[common], help="validate and print a formula")
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("table", parents=[common], help="truth table under one semantics")
    sp.add_argument("expr")
    sp.add_argument("--logic", choices=LOGICS, default="classical")
    sp.add_argument("--grid", help="comma list of weights for --logic matrix (default 1,0.5,0)")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("check", parents=[common], help="tautology or equivalence check")
    sp.add_argument("expr")
    sp.add_argument("--mode", nargs="+", default=["tautology"], metavar="MODE", help="tautology | equiv EXPR2")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("eval", parents=[common], help="evaluate under one assignment")
    sp.add_argument("expr")
    sp.add_argument("--assign", default="", help="e.g. p=0.5,q=1")
    sp.add_argument("--logic", choices=LOGICS + ["projection"], default="classical")
    sp.add_argument("--dim", type=int, default=2)
    sp.add_argument("--basis", default="canonical", help="canonical | random:<seed>")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("diff", parents=[common], help="where two semantics disagree on {0, ½, 1}")
    sp.add_argument("expr")
    sp.add_argument("--pair", choices=["luk-kleene", "luk-matrix"], default="luk-kleene")
    sp.set_defaults(func=cmd_diff)

    sp = sub.add_parser("matrices", parents=[common], help="dump connective matrices")
    sp.add_argument("--dim", type=int, default=2)
    sp.add_argument("--basis", default="canonical")
    sp.add_argument("--symbol", choices=["N", "C", "K", "A", "all"], default="all")
    sp.set_defaults(func=cmd_matrices)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.format, args.quiet)
    expr = getattr(args, "expr", "")
    try:
        return args.func(args, out)
    except ParseError as err:
        print(caret(getattr(err, "source", expr), err), file=sys.stderr)
    except (UsageError, LogicError) as err:
        print(f"error: {err}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
