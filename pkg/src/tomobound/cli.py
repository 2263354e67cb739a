"""Command-line interface.

Exit codes: 0 success, 1 inconsistent sums, 2 invalid input,
3 oracle budget exceeded (or instance too large for the oracle).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .construction import reconstruct
from .core import LineSums, alpha, profile, require_monotone
from .errors import (
    BudgetExceeded,
    Inconsistent,
    InternalInvariantViolation,
    InvalidSums,
    NoSolution,
    TomographyError,
)
from .families import FAMILIES, FamilySpec, generate
from .formats import format_sums, image_rows, parse_sums, to_ascii, to_pbm
from .generalize import general_bounds, pad, reconstruct_general
from .oracle import OBJECTIVES, OracleLimits, count, exists, probe_conjecture
from .ryser import is_consistent

EXIT_OK, EXIT_INCONSISTENT, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


def _add_input(p):
    src = p.add_argument_group("input (one of)")
    src.add_argument("-i", "--input", help="line-sum file ('-' or omitted reads stdin)")
    src.add_argument("--rows", help="inline row sums, e.g. '3 2 2 1'")
    src.add_argument("--cols", help="inline column sums")
    src.add_argument("--example", choices=FAMILIES, help="use an instance family")
    src.add_argument("--param", type=int, help="family parameter (n for ex51/ex52, k otherwise)")
    src.add_argument("--n", type=int, dest="family_n", help="second parameter n for ex53")
    p.add_argument("--sort", action="store_true", help="sort both axes non-increasingly first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tomobound",
        description="Binary images with small boundary from monotone row and column sums.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide consistency and print b, d and alpha")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reconstruct", help="build a small-boundary image")
    _add_input(p)
    p.add_argument("--format", choices=("ascii", "pbm", "json"), default="ascii")
    p.add_argument("--trace", action="store_true", help="include the step list in the report")
    p.add_argument("-o", "--output", help="write the image here instead of stdout")
    p.add_argument("--report", help="write the JSON report here instead of stderr")

    p = sub.add_parser("oracle", help="exhaustive minima and conjecture probe (small instances)")
    _add_input(p)
    p.add_argument("--oracle-objective", choices=OBJECTIVES, default="min_total")
    p.add_argument("--max-nodes", type=int, default=OracleLimits.max_nodes)
    p.add_argument("--max-cells", type=int, help="override the cell cap (also TOMOBOUND_MAX_CELLS)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("generate", help="print the line sums of a family member")
    p.add_argument("--example", choices=FAMILIES, required=True)
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--n", type=int, dest="family_n")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _permutation(seq):
    # stable: ties keep their input order
    return sorted(range(len(seq)), key=lambda k: -seq[k])


def _load(args) -> tuple[LineSums, Optional[dict]]:
    if args.example:
        if args.param is None:
            raise InvalidSums("--example needs --param")
        sums = generate(FamilySpec(args.example, args.param, args.family_n)).line_sums
    elif args.rows is not None or args.cols is not None:
        if args.rows is None or args.cols is None:
            raise InvalidSums("--rows and --cols must be given together")
        sums = parse_sums(f"rows = {args.rows}\ncols = {args.cols}\n")
    elif args.input and args.input != "-":
        with open(args.input) as fh:
            sums = parse_sums(fh.read())
    else:
        sums = parse_sums(sys.stdin.read())

    perms = None
    if args.sort:
        ro, co = _permutation(sums.rows), _permutation(sums.cols)
        sums = LineSums([sums.rows[k] for k in ro], [sums.cols[k] for k in co])
        perms = {"row_order": [k + 1 for k in ro], "col_order": [k + 1 for k in co]}
    require_monotone(sums)
    return sums, perms


def _signed(values):
    return " ".join(f"{v:+d}" if v else "0" for v in values)


def cmd_check(args) -> int:
    sums, perms = _load(args)
    verdict = is_consistent(sums)
    prof = profile(sums.rows, sums.cols)
    out = {
        "consistent": verdict.consistent,
        "reason": verdict.reason,
        "witness_prefix": verdict.prefix,
        "row_total": sums.row_total,
        "col_total": sums.col_total,
        "alpha": alpha(sums) if sums.row_total == sums.col_total else None,
        "b": list(prof.b),
        "d": list(prof.d),
    }
    if perms:
        out.update(perms)
    if args.json:
        print(json.dumps(out))
    else:
        print("consistent: yes" if verdict else f"consistent: no ({verdict.reason})")
        print(f"row total: {sums.row_total}")
        print(f"column total: {sums.col_total}")
        if out["alpha"] is not None:
            print(f"alpha: {out['alpha']}")
        print("b: " + " ".join(map(str, prof.b)))
        print("d: " + _signed(prof.d))
        if perms:
            print("row order: " + " ".join(map(str, perms["row_order"])))
            print("col order: " + " ".join(map(str, perms["col_order"])))
    return EXIT_OK if verdict else EXIT_INCONSISTENT


def reconstruction_report(sums: LineSums, trace: bool = False) -> tuple:
    """Reconstruct and build the JSON report; returns ``(image, report)``."""
    image, measured, bounds = reconstruct_general(sums)
    m, n = sums.m, sums.n
    a = bounds.alpha
    if bounds.direct:
        bound_values = {
            "l_h_alpha": 2 * n + 2 * a,
            "l_h_linear": 4 * n - 4 if n >= 2 else None,
            "l_v_alpha": 2 * m + 2 * a,
        }
    else:
        r1 = sums.rows[0]
        bound_values = {
            "l_h_alpha": 2 * r1 + 2 * a,
            "l_h_linear": 2 * r1 + 2 * n - 2,
            "l_v_alpha": general_bounds(sums, a)[1],
        }
    report = {
        "m": m,
        "n": n,
        "path": "direct" if bounds.direct else "padded",
        "alpha": a,
        "l_h": measured.l_h,
        "l_v": measured.l_v,
        "bounds": bound_values,
    }
    if trace:
        steps = reconstruct(sums if bounds.direct else pad(sums), trace=True).trace
        report["steps"] = [s.as_dict() for s in steps]
        if not bounds.direct:
            report["steps_note"] = "indices refer to the padded instance (row and column 1 added)"
    return image, report


def cmd_reconstruct(args) -> int:
    sums, perms = _load(args)
    image, report = reconstruction_report(sums, args.trace)
    if perms:
        report.update(perms)

    if args.format == "json":
        text = json.dumps({"image": image_rows(image), "report": report}) + "\n"
        report_text = None
    else:
        text = to_ascii(image) if args.format == "ascii" else to_pbm(image)
        report_text = json.dumps(report) + "\n"

    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report_text is not None:
        if args.report:
            with open(args.report, "w") as fh:
                fh.write(report_text)
        else:
            sys.stderr.write(report_text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    sums, _ = _load(args)
    kwargs = {"max_nodes": args.max_nodes, "objective": args.oracle_objective}
    if args.max_cells is not None:
        kwargs["max_cells"] = args.max_cells
    limits = OracleLimits.from_env(**kwargs)

    if sums.row_total != sums.col_total:
        raise NoSolution(f"row total {sums.row_total} != column total {sums.col_total}")
    if args.oracle_objective == "count":
        out = {"count": count(sums, limits)}
    elif args.oracle_objective == "exists":
        out = {"exists": exists(sums, limits)}
    else:
        out = probe_conjecture(sums, limits).as_dict()

    if args.json:
        print(json.dumps(out))
    elif "minima" in out:
        mins = out["minima"]
        print(f"count: {mins['count']}")
        print(f"min l_h: {mins['min_l_h']}")
        print(f"min l_v: {mins['min_l_v']}")
        print(f"min total: {mins['min_total']}")
        status = "witness found" if out["holds"] else "NO witness (counterexample)"
        print(f"conjecture (l_h <= {out['l_h_bound']}, l_v <= {out['l_v_bound']}): {status}")
        if out["witness"]:
            print(out["witness"])
    else:
        for key, val in out.items():
            print(f"{key}: {val}")
    if out.get("count") == 0 or out.get("exists") is False:
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_generate(args) -> int:
    inst = generate(FamilySpec(args.example, args.param, args.family_n))
    if args.format == "json":
        print(json.dumps({"rows": list(inst.line_sums.rows), "cols": list(inst.line_sums.cols)}))
    else:
        sys.stdout.write(format_sums(inst.line_sums))
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "reconstruct": cmd_reconstruct,
    "oracle": cmd_oracle,
    "generate": cmd_generate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"tomobound: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (Inconsistent, NoSolution) as exc:
        print(f"tomobound: inconsistent: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except InternalInvariantViolation:
        raise
    except (TomographyError, OSError, ValueError) as exc:
        print(f"tomobound: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
