"""``scator`` command line: eval, grid, verify."""
from __future__ import annotations

import argparse
import sys

from . import expr, grid, verify
from .numeric import ScatorError, Tolerance


def _cmd_eval(args) -> int:
    tol = Tolerance.from_env()
    try:
        tree = expr.parse(args.expression)
        value = expr.evaluate(tree, exact=args.exact, tol=tol)
    except expr.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ScatorError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(expr.format_value(value))
    return 0


def _cmd_grid(args) -> int:
    try:
        spec = grid.GridSpec(
            a0=grid.parse_number(args.a0),
            min=grid.parse_number(args.min),
            max=grid.parse_number(args.max),
            step=grid.parse_number(args.step),
        )
    except grid.UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    samples = grid.sample_regions(spec, exact=args.exact, tol=Tolerance.from_env())
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            grid.write_csv(samples, fh)
    else:
        grid.write_csv(samples, sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    if args.trials < 1:
        print("usage error: --trials must be at least 1", file=sys.stderr)
        return 2
    records = verify.run_identity_suite(args.seed, args.trials, args.module)
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            failures = verify.write_report(records, fh)
    else:
        failures = verify.write_report(records, sys.stdout)
    if failures:
        print(f"{failures} exact-backend failure(s)", file=sys.stderr)
        return 1
    return 0


def _backend_flags(p: argparse.ArgumentParser, default_exact: bool) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", dest="exact", action="store_true", help="exact rational arithmetic")
    g.add_argument("--float", dest="exact", action="store_false", help="64-bit floating point")
    p.set_defaults(exact=default_exact)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scator", description="Hyperbolic scator algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a scator expression")
    _backend_flags(p, default_exact=True)
    p.add_argument("expression", help='e.g. "(2;1,1)*(2;1,1)" or "norm2(dual((2;1,1)))"')
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("grid", help="classify a fixed-time cross-section, CSV output")
    p.add_argument("--a0", required=True)
    p.add_argument("--min", required=True)
    p.add_argument("--max", required=True)
    p.add_argument("--step", required=True)
    p.add_argument("--out", help="write CSV here instead of stdout")
    _backend_flags(p, default_exact=False)
    p.set_defaults(func=_cmd_grid)

    p = sub.add_parser("verify", help="run the seeded identity suite, JSON lines output")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--module", default="all", choices=("all",) + verify.MODULES)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
