"""Command-line entry point.

    heckekoszul verify hecke|koszul|convolution|all [flags]
    heckekoszul hecke eval EXPR --type A2
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .expr import EvalError, ParseError, evaluate
from .hecke import render
from .rootdata import RootDataError, RootDatum, known_types
from .suites import HECKE_TYPES, SuiteParams, run_suite


class UsageError(Exception):
    pass


def _window(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b with integers, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty window {a},{b}")
    return a, b


def _nonneg(text: str) -> int:
    k = int(text)
    if k < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return k


def _positive(text: str) -> int:
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heckekoszul", description="Exact checks for the affine Hecke algebra involutions and linear Koszul duality.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=("hecke", "koszul", "convolution", "all"))
    v.add_argument("--type", action="append", dest="types", metavar="LABEL", help="root datum label (repeatable; default: A1 A1xA1 A2 B2 G2)")
    v.add_argument("--weight-bound", type=_nonneg, default=3)
    v.add_argument("--dim", type=_positive, help="ambient dimension n")
    v.add_argument("--fdim", type=_nonneg, help="dimension of F for the convolution suite")
    v.add_argument("--trials", type=_positive)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--window", type=_window, metavar="A,B", help="internal-degree window")
    v.add_argument("--json", type=Path, metavar="PATH", help="write the report as JSON")
    v.add_argument("--timing", action="store_true", help="include elapsed times in the JSON report")
    v.add_argument("--spec", metavar="STRING", help="generator images to verify instead of the built-in maps")
    v.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    v.add_argument("-q", "--quiet", action="store_true", help="only print the summary line")

    h = sub.add_parser("hecke", help="Hecke algebra utilities")
    hsub = h.add_subparsers(dest="hecke_command", required=True)
    e = hsub.add_parser("eval", help="evaluate an expression in the Bernstein basis")
    e.add_argument("expr")
    e.add_argument("--type", default="A1", metavar="LABEL")
    return p


def _check_types(labels) -> tuple[str, ...]:
    out = []
    for lab in labels:
        for t in lab.split(","):
            t = t.strip()
            if t not in known_types():
                raise UsageError(f"unknown root datum {t!r}; known: {', '.join(known_types())}")
            out.append(t)
    return tuple(out)


def cmd_verify(args) -> int:
    types = _check_types(args.types) if args.types else HECKE_TYPES
    if args.dim is not None and args.fdim is not None and args.fdim > args.dim:
        raise UsageError(f"--fdim {args.fdim} exceeds --dim {args.dim}")
    if args.fdim is not None and args.dim is None and args.fdim > 1:
        raise UsageError("--fdim needs --dim when it exceeds 1")
    if args.spec is not None:
        # reject malformed specs before running anything
        try:
            from .expr import parse_morphism_spec

            for t in types:
                parse_morphism_spec(args.spec, RootDatum.from_label(t))
        except (ParseError, EvalError) as exc:
            raise UsageError(f"--spec: {exc}") from None
    params = SuiteParams(
        types=types,
        weight_bound=args.weight_bound,
        dim=args.dim,
        fdim=args.fdim,
        trials=args.trials,
        window=args.window,
        spec=args.spec,
        jobs=args.jobs,
    )
    report = run_suite(args.suite, params, args.seed)
    lines = report.summary_lines()
    print("\n".join(lines[-1:] if args.quiet else lines))
    if args.json is not None:
        args.json.write_text(report.dumps(timing=args.timing))
    return report.exit_code


def cmd_hecke_eval(args) -> int:
    try:
        d = RootDatum.from_label(args.type)
    except RootDataError as exc:
        raise UsageError(str(exc)) from None
    try:
        print(render(evaluate(args.expr, d)))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EvalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_hecke_eval(args)
    except UsageError as exc:
        print(f"heckekoszul: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
