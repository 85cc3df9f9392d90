"""Command-line front end.

Subcommands: det, minor, cofactor, expand, verify, gen.  Matrix files
may be in the text or JSON format (detected by the first non-space
character); "-" reads stdin.  Axis flags are h (horizontal layer,
fixes i), p (vertical page, fixes j), l (vertical layer, fixes k).

Exit codes: 0 success (or verification pass), 1 verification failure,
2 usage or input error.  Identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core3d import Axis, CubicMatrix, Index3, ScalarOverflowError, ShapeError
from .determinant import det_closed, det_permutation
from .io import ParseError, parse_json, parse_text, serialize_text
from .laplace import ExpansionTrace, SignConvention, cofactor, det_laplace, expand, minor
from .verify import GenSpec, batch_verify, cross_check, random_cubic

__all__ = ["main"]


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_matrix(path: str) -> CubicMatrix:
    text = _read_source(path)
    if text.lstrip()[:1] == "{":
        return parse_json(text)
    return parse_text(text)


def _scalar_json(value):
    return value.num if value.den == 1 else f"{value.num}/{value.den}"


def _print_trace(trace: ExpansionTrace) -> None:
    print(f"axis {trace.axis.letter} index {trace.index}")
    for t in trace.terms:
        print(
            f"{t.at} entry={t.entry} sign={t.sign:+d} "
            f"minor={t.minor_value} contribution={t.contribution}"
        )
    print(f"total={trace.total}")


def _trace_json(trace: ExpansionTrace) -> dict:
    return {
        "axis": trace.axis.letter,
        "index": trace.index,
        "terms": [
            {
                "i": t.at.i,
                "j": t.at.j,
                "k": t.at.k,
                "entry": _scalar_json(t.entry),
                "sign": t.sign,
                "minor": _scalar_json(t.minor_value),
                "contribution": _scalar_json(t.contribution),
            }
            for t in trace.terms
        ],
        "total": _scalar_json(trace.total),
    }


def _cmd_det(args, parser) -> int:
    if args.trace and args.method in ("closed", "perm"):
        parser.error("--trace requires --method laplace")
    A = _load_matrix(args.file)
    if args.method == "closed":
        value = det_closed(A)
    elif args.method == "perm":
        value = det_permutation(A)
    else:
        axis = Axis.from_letter(args.axis)
        value = det_laplace(A, axis, args.index)
    if args.trace:
        trace = expand(A, Axis.from_letter(args.axis), args.index)
        if args.json:
            print(json.dumps({"det": _scalar_json(value), "trace": _trace_json(trace)}))
        else:
            _print_trace(trace)
        return 0
    if args.json:
        print(json.dumps({"det": _scalar_json(value)}))
    else:
        print(value)
    return 0


def _cmd_minor(args, parser) -> int:
    A = _load_matrix(args.file)
    print(minor(A, Index3(args.i, args.j, args.k)))
    return 0


def _cmd_cofactor(args, parser) -> int:
    A = _load_matrix(args.file)
    convention = SignConvention(args.convention)
    if convention is SignConvention.PAPER_DEF:
        print(
            "note: paper-def signs the minor with (-1)^(i+j+k); "
            "layer expansions use the expansion sign (-1)^(j+k)",
            file=sys.stderr,
        )
    print(cofactor(A, Index3(args.i, args.j, args.k), convention))
    return 0


def _cmd_expand(args, parser) -> int:
    A = _load_matrix(args.file)
    _print_trace(expand(A, Axis.from_letter(args.axis), args.index))
    return 0


def _cmd_verify(args, parser) -> int:
    if args.random:
        try:
            orders = tuple(int(tok) for tok in args.orders.split(","))
        except ValueError:
            parser.error(f"--orders must be comma-separated integers, got {args.orders!r}")
        try:
            summary = batch_verify(orders, args.trials, args.seed, args.range)
        except ValueError as err:
            parser.error(str(err))
        print(f"orders={args.orders} trials={args.trials} seed={args.seed} range={args.range}")
        print(f"trials run: {summary.trials}")
        print(f"failures: {summary.failures}")
        if summary.failures:
            first = summary.first_failure
            print(f"first failure: --order {first.order} --seed {first.seed} --range {first.range}")
            print("FAIL")
            return 1
        print("PASS")
        return 0
    if args.file is None:
        parser.error("verify needs a matrix file or --random")
    report = cross_check(_load_matrix(args.file))
    print(f"matrix {report.subject}")
    print(f"det={report.det_value}")
    for name, value in report.paths.items():
        status = "ok" if report.agreements[name] else "MISMATCH"
        print(f"path {name} = {value} {status}")
    for name, ok in report.derived_laws:
        print(f"law {name} {'ok' if ok else 'FAIL'}")
    print("PASS" if report.overall else "FAIL")
    return 0 if report.overall else 1


def _cmd_gen(args, parser) -> int:
    try:
        spec = GenSpec(args.order, args.seed, args.range)
    except ValueError as err:
        parser.error(str(err))
    sys.stdout.write(serialize_text(random_cubic(spec)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicdet",
        description="Exact determinants of cubic (n x n x n) matrices of orders 1-3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_axis_flags(p, required: bool):
        p.add_argument("--axis", choices=("h", "p", "l"), required=required,
                       default=None if required else "h",
                       help="expansion direction: h fixes i, p fixes j, l fixes k")
        p.add_argument("--index", type=int, required=required,
                       default=None if required else 1,
                       help="1-based layer index along the axis")

    p_det = sub.add_parser("det", help="determinant of a matrix file")
    p_det.add_argument("file", help="matrix file (text or JSON), or - for stdin")
    p_det.add_argument("--method", choices=("closed", "perm", "laplace"), default="closed",
                       help="closed-form table (default), permutation sum, or recursive expansion")
    add_axis_flags(p_det, required=False)
    p_det.add_argument("--trace", action="store_true",
                       help="print the per-term expansion trace (laplace method only)")
    p_det.add_argument("--json", action="store_true", help="machine-readable output")
    p_det.set_defaults(func=_cmd_det)

    p_minor = sub.add_parser("minor", help="minor of one entry")
    p_minor.add_argument("file")
    p_minor.add_argument("i", type=int)
    p_minor.add_argument("j", type=int)
    p_minor.add_argument("k", type=int)
    p_minor.set_defaults(func=_cmd_minor)

    p_cof = sub.add_parser("cofactor", help="signed minor of one entry")
    p_cof.add_argument("file")
    p_cof.add_argument("i", type=int)
    p_cof.add_argument("j", type=int)
    p_cof.add_argument("k", type=int)
    p_cof.add_argument("--convention", choices=("expansion", "paper-def"), default="expansion",
                       help="sign convention: (-1)^(j+k) (default) or (-1)^(i+j+k)")
    p_cof.set_defaults(func=_cmd_cofactor)

    p_exp = sub.add_parser("expand", help="full single-layer expansion trace")
    p_exp.add_argument("file")
    add_axis_flags(p_exp, required=True)
    p_exp.set_defaults(func=_cmd_expand)

    p_ver = sub.add_parser("verify", help="cross-check all determinant paths and laws")
    p_ver.add_argument("file", nargs="?", default=None,
                       help="matrix file to cross-check (omit with --random)")
    p_ver.add_argument("--random", action="store_true",
                       help="batch-verify seeded random matrices instead of a file")
    p_ver.add_argument("--orders", default="2,3", help="comma-separated orders (default 2,3)")
    p_ver.add_argument("--trials", type=int, default=100, help="trials per order (default 100)")
    p_ver.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p_ver.add_argument("--range", type=int, default=9,
                       help="entries drawn from [-range, range] (default 9)")
    p_ver.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("gen", help="emit a seeded random matrix in canonical text form")
    p_gen.add_argument("--order", type=int, required=True, help="matrix order (1, 2, or 3)")
    p_gen.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    p_gen.add_argument("--range", type=int, default=9,
                       help="entries drawn from [-range, range] (default 9)")
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (ParseError, ShapeError, ScalarOverflowError, IndexError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
