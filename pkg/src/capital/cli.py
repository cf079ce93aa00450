"""Command-line entry point: ``capital <command> ...``.

Exit codes: 0 success or valid, 2 violation or counterexample, 3 budget
exceeded, 64 usage error, 65 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence, TextIO

from .core import colour5_pipeline, validate_capital
from .corpus import default_corpus
from .discharging import Disconnected, audit
from .exact import (
    DEFAULT_SEED,
    BudgetExceeded,
    ProbeOutcome,
    SolveBudget,
    capital_list_colouring,
    min_capital_colouring,
    probe_choosability,
    random_list_assignments,
)
from .generators import FAMILIES, BadParams, UnknownFamily, generate
from .plane_graph import PlaneGraph, PlaneGraphError, from_json, to_json
from .rbb import Colour, ConditionSet, HasTwoFaces, RBBRequest, XYNotOuter, check_conditions, oracle_rbb, recursive_rbb

__all__ = ["EXIT_BUDGET", "EXIT_DATA", "EXIT_OK", "EXIT_USAGE", "EXIT_VIOLATION", "main", "run_command"]

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------- input


def _read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str, stdin: TextIO) -> PlaneGraph:
    try:
        return from_json(_read_text(path, stdin))
    except PlaneGraphError as exc:
        raise DataError(f"{path}: {exc}") from None


def _load_map(path: str, stdin: TextIO, g: PlaneGraph, what: str) -> dict[int, object]:
    try:
        data = json.loads(_read_text(path, stdin))
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DataError(f"{path}: {what} must be a JSON object keyed by vertex id")
    out: dict[int, object] = {}
    for key, value in data.items():
        try:
            v = int(key)
        except ValueError:
            raise DataError(f"{path}: vertex id {key!r} is not an integer") from None
        out[v] = value
    unknown = sorted(set(out) - set(g.vertices))
    missing = [v for v in g.vertices if v not in out]
    if unknown or missing:
        raise DataError(f"{path}: {what} does not match the graph (missing {missing}, unknown {unknown})")
    return out


def _load_colouring(path: str, stdin: TextIO, g: PlaneGraph) -> dict[int, int]:
    raw = _load_map(path, stdin, g, "colouring")
    for v, c in raw.items():
        if not isinstance(c, int) or isinstance(c, bool):
            raise DataError(f"{path}: colour of {v} must be an integer")
    return raw  # type: ignore[return-value]


def _load_lists(path: str, stdin: TextIO, g: PlaneGraph) -> dict[int, list[int]]:
    raw = _load_map(path, stdin, g, "list assignment")
    out = {}
    for v, vals in raw.items():
        ok = isinstance(vals, list) and vals and all(isinstance(c, int) and not isinstance(c, bool) and c >= 1 for c in vals)
        if not ok:
            raise DataError(f"{path}: list of {v} must be a nonempty array of positive integers")
        out[v] = sorted(set(vals))
    return out


# ---------------------------------------------------------------- output


def _colouring_json(col) -> dict[str, object]:
    return {str(v): (c.value if isinstance(c, Colour) else c) for v, c in sorted(col.items())}


class _Out:
    def __init__(self, args: argparse.Namespace, stdout: TextIO) -> None:
        self.json = args.json
        self.stdout = stdout

    def emit(self, payload: dict, lines: Sequence[str]) -> None:
        if self.json:
            self.stdout.write(json.dumps(payload) + "\n")
        else:
            for line in lines:
                self.stdout.write(line + "\n")


def _budget(args: argparse.Namespace) -> SolveBudget:
    try:
        return SolveBudget(args.budget_nodes, args.budget_seconds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _budget_payload(exc: BudgetExceeded) -> dict:
    return {"status": "budget-exceeded", "nodes": exc.nodes}


# ---------------------------------------------------------------- commands


def cmd_validate(args, out: _Out, stdin: TextIO) -> int:
    g = _load_graph(args.graph, stdin)
    col = _load_colouring(args.colouring, stdin, g)
    report = validate_capital(g, col)
    lines = ["valid capital colouring" if report.ok else "not a capital colouring"]
    lines += [f"monochromatic edge {u}-{v}" for u, v in report.monochromatic_edges]
    lines += [
        f"face {f.region} {list(f.vertices)}: max {f.value} held by {list(f.holders)}" for f in report.face_violations
    ]
    lines += [f"vertex {v}: colour is not a positive integer" for v in report.bad_values]
    out.emit(report.to_dict(), lines)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_colour5(args, out: _Out, stdin: TextIO) -> int:
    g = _load_graph(args.graph, stdin)
    res = colour5_pipeline(g)
    top = max(res.colouring.values(), default=0)
    payload = {
        "valid": True,
        "max_colour": top,
        "red_vertex": res.red_vertex,
        "colouring": _colouring_json(res.colouring),
    }
    lines = [f"valid capital colouring, max colour {top}"] + [f"{v} {c}" for v, c in sorted(res.colouring.items())]
    out.emit(payload, lines)
    return EXIT_OK


def cmd_chi(args, out: _Out, stdin: TextIO) -> int:
    g = _load_graph(args.graph, stdin)
    if not g.vertices:
        raise DataError("the capital chromatic number needs at least one vertex")
    try:
        k, col = min_capital_colouring(g, _budget(args))
    except BudgetExceeded as exc:
        out.emit(_budget_payload(exc), [str(exc)])
        return EXIT_BUDGET
    out.emit({"status": "ok", "chi_capital": k, "colouring": _colouring_json(col)}, [f"chi_capital {k}"])
    return EXIT_OK


def cmd_list_solve(args, out: _Out, stdin: TextIO) -> int:
    g = _load_graph(args.graph, stdin)
    lists = _load_lists(args.lists, stdin, g)
    try:
        col = capital_list_colouring(g, lists, _budget(args))
    except BudgetExceeded as exc:
        out.emit(_budget_payload(exc), [str(exc)])
        return EXIT_BUDGET
    if col is None:
        out.emit({"status": "absent", "colouring": None}, ["no capital colouring from these lists"])
        return EXIT_VIOLATION
    out.emit({"status": "ok", "colouring": _colouring_json(col)}, ["found"] + [f"{v} {c}" for v, c in sorted(col.items())])
    return EXIT_OK


def cmd_list_probe(args, out: _Out, stdin: TextIO) -> int:
    g = _load_graph(args.graph, stdin)
    if not 1 <= args.k <= args.m or args.count < 0:
        raise UsageError("need 1 <= k <= m and count >= 0")
    budget = _budget(args)
    seed = DEFAULT_SEED if args.seed is None else args.seed
    base = {"seed": seed, "k": args.k, "m": args.m}
    for i, lists in enumerate(random_list_assignments(g, args.k, args.m, args.count, seed)):
        try:
            col = capital_list_colouring(g, lists, budget)
        except BudgetExceeded as exc:
            out.emit({**base, "status": "budget-exceeded", "checked": i, "nodes": exc.nodes}, [f"instance {i}: {exc}"])
            return EXIT_BUDGET
        if col is None:
            payload = {**base, "status": "counterexample", "checked": i + 1, "lists": _colouring_json(lists)}
            out.emit(payload, [f"instance {i}: no capital colouring"])
            return EXIT_VIOLATION
    out.emit({**base, "status": "all-satisfied", "checked": args.count}, [f"all {args.count} assignments solved (seed {seed})"])
    return EXIT_OK


def cmd_choosable(args, out: _Out, stdin: TextIO) -> int:
    g = _load_graph(args.graph, stdin)
    if not 1 <= args.k <= args.m:
        raise UsageError("need 1 <= k <= m")
    res = probe_choosability(g, args.k, args.m, _budget(args))
    payload = {
        "status": res.outcome.value,
        "k": args.k,
        "m": args.m,
        "checked": res.checked,
        "counterexample": None if res.counterexample is None else _colouring_json(res.counterexample),
    }
    out.emit(payload, [f"{res.outcome.value} after {res.checked} assignments"])
    return {
        ProbeOutcome.ALL_SATISFIED: EXIT_OK,
        ProbeOutcome.COUNTEREXAMPLE: EXIT_VIOLATION,
        ProbeOutcome.BUDGET_EXCEEDED: EXIT_BUDGET,
    }[res.outcome]


def cmd_discharge(args, out: _Out, stdin: TextIO) -> int:
    g = _load_graph(args.graph, stdin)
    try:
        rep = audit(g)
    except Disconnected as exc:
        raise DataError(str(exc)) from None
    lines = [
        f"total initial {rep.initial.total}/6, final {rep.final.total}/6",
        f"conserved {rep.conserved_initial and rep.conserved_final}",
        f"hits {len(rep.hits)}: " + ", ".join(f"{k}={n}" for k, n in rep.hit_counts().items() if n),
    ]
    if rep.alarm:
        lines.append(f"ALARM: {rep.alarm}")
    out.emit(rep.to_dict(), lines)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_rbb(args, out: _Out, stdin: TextIO) -> int:
    g = _load_graph(args.graph, stdin)
    try:
        req = RBBRequest(args.x, args.y, Colour(args.c), ConditionSet(args.conditions))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        col = oracle_rbb(g, req) if args.oracle else recursive_rbb(g, req)
    except (HasTwoFaces, XYNotOuter) as exc:
        raise DataError(str(exc)) from None
    violations = check_conditions(g, col, req)
    payload = {
        "ok": not violations,
        "violations": [{"condition": v.condition, "witness": list(v.witness), "detail": v.detail} for v in violations],
        "colouring": _colouring_json(col),
    }
    lines = [f"{v} {c.value}" for v, c in sorted(col.items())] + [
        f"condition {v.condition} fails at {list(v.witness)}" for v in violations
    ]
    out.emit(payload, lines)
    return EXIT_OK if not violations else EXIT_VIOLATION


def cmd_gen(args, out: _Out, stdin: TextIO) -> int:
    try:
        g = generate(args.family, args.params)
    except UnknownFamily:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(sorted(FAMILIES))}") from None
    except (BadParams, PlaneGraphError, ValueError) as exc:
        raise UsageError(f"{args.family}: {exc}") from None
    out.stdout.write(to_json(g) + "\n")
    return EXIT_OK


def cmd_corpus(args, out: _Out, stdin: TextIO) -> int:
    entries = default_corpus()
    if args.names:
        known = {e.name for e in entries}
        unknown = sorted(set(args.names) - known)
        if unknown:
            raise UsageError(f"unknown corpus entries: {', '.join(unknown)}")
        entries = [e for e in entries if e.name in args.names]
    if args.list:
        out.emit({"entries": [{"name": e.name, "family": e.family, "params": list(e.params)} for e in entries]},
                 [f"{e.name} {e.family} {' '.join(map(str, e.params))}".rstrip() for e in entries])
        return EXIT_OK
    budget = _budget(args)
    rows, code = [], EXIT_OK
    for e in entries:
        g = e.build()
        row: dict = {"name": e.name, "vertices": g.n_vertices, "edges": g.n_edges}
        col = colour5_pipeline(g).colouring
        row["colour5_valid"] = validate_capital(g, col).ok
        row["colour5_max"] = max(col.values(), default=0)
        if not args.skip_chi and g.vertices:
            try:
                row["chi_capital"] = min_capital_colouring(g, budget)[0]
            except BudgetExceeded:
                row["chi_capital"] = "budget-exceeded"
                code = max(code, EXIT_BUDGET) if code != EXIT_VIOLATION else code
        try:
            rep = audit(g)
            row["audit_ok"] = rep.ok
            row["hits"] = len(rep.hits)
        except Disconnected:
            row["audit_ok"] = None
        if not row["colour5_valid"] or row["audit_ok"] is False:
            code = EXIT_VIOLATION
        rows.append(row)
    lines = [" ".join(f"{k}={v}" for k, v in r.items()) for r in rows]
    out.emit({"entries": rows}, lines)
    return code


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--budget-nodes", type=int, default=10**7, metavar="N", help="search node limit")
    common.add_argument("--budget-seconds", type=float, default=None, metavar="S", help="wall-clock limit")
    common.add_argument("--seed", type=int, default=None, metavar="N", help=f"random seed (default {DEFAULT_SEED})")

    parser = _Parser(prog="capital", description="Capital colourings of plane graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, "check a colouring file against a graph")
    p.add_argument("graph")
    p.add_argument("colouring")
    add("colour5", cmd_colour5, "capital colouring with at most 5 colours").add_argument("graph")
    add("chi", cmd_chi, "exact capital chromatic number").add_argument("graph")
    p = add("list-solve", cmd_list_solve, "capital colouring from a list assignment file")
    p.add_argument("graph")
    p.add_argument("lists")
    p = add("list-probe", cmd_list_probe, "solve seeded random k-lists from {1..m}")
    p.add_argument("graph")
    p.add_argument("-k", type=int, default=7)
    p.add_argument("-m", type=int, default=10)
    p.add_argument("--count", type=int, default=200)
    p = add("choosable", cmd_choosable, "try every k-list assignment from {1..m}")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    add("discharge", cmd_discharge, "charge audit and reducible configurations").add_argument("graph")
    p = add("rbb", cmd_rbb, "red/blue/black colouring anchored at an outer edge")
    p.add_argument("graph")
    p.add_argument("-x", type=int, required=True)
    p.add_argument("-y", type=int, required=True)
    p.add_argument("-c", choices=[Colour.BLACK.value, Colour.BLUE.value], default=Colour.BLACK.value)
    p.add_argument("--conditions", choices=[c.value for c in ConditionSet], default=ConditionSet.STRONG7.value)
    p.add_argument("--oracle", action="store_true", help="use the direct search instead of the recursion")
    p = add("gen", cmd_gen, "print a generated graph as JSON")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p = add("corpus", cmd_corpus, "summarise the built-in corpus")
    p.add_argument("names", nargs="*")
    p.add_argument("--list", action="store_true", help="only list entries")
    p.add_argument("--skip-chi", action="store_true", help="skip the exact chromatic number")
    return parser


def run_command(
    argv: Sequence[str],
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
    stdin: TextIO | None = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args, _Out(args, stdout), stdin)
    except UsageError as exc:
        stderr.write(f"capital {args.command}: {exc}\n")
        return EXIT_USAGE
    except DataError as exc:
        stderr.write(f"capital {args.command}: {exc}\n")
        return EXIT_DATA


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
