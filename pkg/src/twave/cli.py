"""Command-line surface: solve, list and apply moves, print the nimber
triangle, convert between rulesets, certify reductions, evaluate quantum
Nim, and serve the HTTP API.

Exit codes: 0 success, 1 verification failure, 2 parse/validation error,
3 infeasible move, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .documents import (
    ParseError,
    PositionDocument,
    ValidationError,
    document_for,
    document_json,
    move_from_json,
    move_to_json,
    parse_position,
    serialize_position,
)
from .nimber import OutcomeClass
from .quantum import qnim_options, qnim_outcome
from .reductions import (
    REDUCTIONS,
    InapplicableTransformer,
    convert_position,
    sample_source,
    verify_reduction,
)
from .rulesets import Superposition, options
from .solver import BudgetExceeded, SolveBudget, grundy
from .triangle import triangle_position, triangle_value, TriangleParams

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4


class InfeasibleMove(ValueError):
    pass


def _read_document(path: str) -> PositionDocument:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_position(text)


def _budget(args) -> SolveBudget:
    kwargs = {}
    if getattr(args, "budget_nodes", None) is not None:
        kwargs["max_nodes"] = args.budget_nodes
    if getattr(args, "budget_memo", None) is not None:
        kwargs["max_memo_entries"] = args.budget_memo
    return SolveBudget(**kwargs)


def _cmd_solve(args) -> int:
    doc = _read_document(args.file)
    result = grundy(doc.payload, budget=_budget(args))
    best = (
        None if result.best_move is None
        else move_to_json(doc.ruleset, result.best_move)
    )
    if args.json:
        print(json.dumps({
            "grundy": str(result.grundy),
            "outcome": result.outcome.value,
            "best_move": best,
            "nodes": result.nodes_expanded,
            "depth": result.max_depth,
        }, sort_keys=True))
    else:
        print(f"grundy: {result.grundy}")
        print(f"outcome: {result.outcome}")
        print(f"best move: {json.dumps(best) if best is not None else '-'}")
        print(f"nodes: {result.nodes_expanded}")
        print(f"depth: {result.max_depth}")
    return EXIT_OK


def _cmd_moves(args) -> int:
    doc = _read_document(args.file)
    moves = [move_to_json(doc.ruleset, m) for m, _ in options(doc.payload)]
    if args.json:
        print(json.dumps({"moves": moves}))
    else:
        for m in moves:
            print(json.dumps(m))
    return EXIT_OK


def _cmd_apply(args) -> int:
    doc = _read_document(args.file)
    try:
        wanted = move_from_json(doc.ruleset, json.loads(args.move))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"move is not valid JSON: {exc}") from None
    for move, successor in options(doc.payload):
        if move == wanted:
            print(serialize_position(document_for(successor)))
            return EXIT_OK
    raise InfeasibleMove(f"move {args.move} is not feasible here")


def _cmd_triangle(args) -> int:
    header = "rows \\ odd rows"
    print(f"{header}: closed-form values" + (" | oracle" if args.oracle else ""))
    for p in range(1, args.max_rows + 1):
        cells = []
        for k in range(p + 1):
            value = triangle_value(TriangleParams(p, k, 0))
            if args.oracle:
                solved = grundy(triangle_position(p, k)).grundy
                mark = "" if solved == value else "!"
                cells.append(f"{value}/{solved}{mark}")
            else:
                cells.append(str(value))
        print(f"{p:>2}: " + " ".join(f"{c:>6}" for c in cells))
    return EXIT_OK


def _cmd_convert(args) -> int:
    doc = _read_document(args.file)
    converted, table = convert_position(doc.payload, doc.ruleset, args.to)
    out_doc = document_for(converted)
    if args.json:
        bijection = None
        if table is not None:
            bijection = {
                json.dumps(move_to_json(doc.ruleset, m)): move_to_json(args.to, i)
                for m, i in table.items()
            }
        print(json.dumps({
            "document": document_json(out_doc),
            "move_bijection": bijection,
        }, sort_keys=True))
    else:
        print(serialize_position(out_doc))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.reduction not in REDUCTIONS:
        raise ValidationError(
            f"unknown reduction {args.reduction!r}; known: "
            + ", ".join(sorted(REDUCTIONS))
        )
    budget = _budget(args)
    sources = []
    if args.file:
        sources.append(_read_document(args.file).payload)
    else:
        rng = random.Random(args.seed)
        sources = [sample_source(args.reduction, rng) for _ in range(args.samples)]
    failures = 0
    for i, source in enumerate(sources):
        report = verify_reduction(
            source, args.reduction, budget=budget,
            max_bijection_depth=args.depth,
        )
        status = "ok" if report.verdict == "pass" else "FAIL"
        line = (
            f"{status} {args.reduction}[{i}] "
            f"{report.source_grundy} -> {report.target_grundy} "
            f"depth={report.move_bijection_depth}"
        )
        if report.counterexample:
            line += f" ({report.counterexample})"
        print(line)
        failures += report.verdict != "pass"
    print(f"{len(sources) - failures}/{len(sources)} passed")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def _cmd_qnim(args) -> int:
    doc = _read_document(args.file)
    position = doc.payload
    if not isinstance(position, Superposition):
        raise ValidationError(
            "qnim expects a nim or demi_quantum_nim document"
        )
    result = qnim_outcome(position, budget=_budget(args), max_width=args.max_width)
    winning = None
    if result == OutcomeClass.N:
        for move, succ in qnim_options(position, max_width=args.max_width):
            if qnim_outcome(succ, max_width=args.max_width) == OutcomeClass.P:
                winning = [list(part) for part in move.rendering()]
                break
    if args.json:
        print(json.dumps({"outcome": result.value, "winning_move": winning}))
    else:
        print(f"outcome: {result}")
        if winning is not None:
            print(f"winning move: {json.dumps(winning)}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("twave.service:app", host=args.host, port=args.port)
    return EXIT_OK


def _add_budget_flags(sub) -> None:
    sub.add_argument("--budget-nodes", type=int, default=None,
                     help="node expansion limit (default 50M)")
    sub.add_argument("--budget-memo", type=int, default=None,
                     help="memo entry limit (default 10M)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twave",
        description="Analysis workbench for the Transverse Wave game family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="grundy value, outcome and best move")
    p.add_argument("file", help="position file or - for stdin")
    _add_budget_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("moves", help="list feasible moves")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_moves)

    p = sub.add_parser("apply", help="apply a move, print the successor document")
    p.add_argument("file")
    p.add_argument("--move", required=True, help="move as JSON, e.g. 2 or [0,-2]")
    p.set_defaults(fn=_cmd_apply)

    p = sub.add_parser("triangle", help="print the closed-form nimber triangle")
    p.add_argument("--max-rows", type=int, default=8)
    p.add_argument("--oracle", action="store_true",
                   help="solve each position and print both values")
    p.set_defaults(fn=_cmd_triangle)

    p = sub.add_parser("convert", help="convert a position to another ruleset")
    p.add_argument("file")
    p.add_argument("--to", required=True, metavar="RULESET")
    p.add_argument("--json", action="store_true",
                   help="include the move bijection table")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("verify", help="certify a reduction on samples or a file")
    p.add_argument("--reduction", required=True)
    p.add_argument("--file", default=None)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=None,
                   help="limit the move-bijection walk depth")
    _add_budget_flags(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("qnim", help="variant-D quantum Nim outcome")
    p.add_argument("file")
    p.add_argument("--max-width", type=int, default=None)
    _add_budget_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_qnim)

    p = sub.add_parser("serve", help="run the HTTP analysis service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValidationError, InapplicableTransformer, ValueError) as exc:
        if isinstance(exc, InfeasibleMove):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INFEASIBLE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        print(f"error: {exc} after {exc.nodes_expanded} nodes", file=sys.stderr)
        return EXIT_BUDGET
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
