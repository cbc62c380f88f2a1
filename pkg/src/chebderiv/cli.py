"""Command-line entry point.

Exit codes: 0 success, 1 verification or bench equality failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bench import BenchMismatchError, format_bench, run_bench
from .derivatives import derivative_explicit, derivative_oracle, diff_matrix, u_derivative_triple_sum
from .polynomial import (
    ChebExpansion,
    basis_monomial,
    clenshaw_eval,
    format_rational,
    monomial_power_to_u,
    parse_rational,
)
from .verification import SUITES, verify_all, verify_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an exact rational P/Q, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    parser = _Parser(prog="chebderiv", description="Exact Chebyshev-basis derivatives.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    kind = dict(choices=["U", "T"], required=True)

    p = sub.add_parser("gen", parents=[common], help="monomial form of T_n or U_n")
    p.add_argument("--kind", **kind)
    p.add_argument("--n", type=_nonneg, required=True)

    p = sub.add_parser("derive", parents=[common], help="s-th derivative of T_n or U_n")
    p.add_argument("--kind", **kind)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--s", type=_nonneg, required=True)
    p.add_argument("--method", choices=["explicit", "triple-sum", "oracle"], default="explicit")

    p = sub.add_parser("invert", parents=[common], help="x^J in the U basis")
    p.add_argument("--power", type=_nonneg, required=True)

    p = sub.add_parser("matrix", parents=[common], help="differentiation matrix")
    p.add_argument("--kind", **kind)
    p.add_argument("--s", type=_nonneg, required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("eval", parents=[common], help="evaluate T_n or U_n at a rational point")
    p.add_argument("--kind", **kind)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--at", type=_rational, required=True)

    p = sub.add_parser("verify", parents=[common], help="run identity sweeps")
    p.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)

    p = sub.add_parser("bench", parents=[common], help="time explicit vs oracle paths")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--s", type=_nonneg, required=True)

    return parser


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _execute(args) -> tuple[int, str]:
    cmd = args.command
    if cmd == "gen":
        return EXIT_OK, _dump(basis_monomial(args.kind, args.n).to_json())

    if cmd == "derive":
        if args.method == "explicit":
            result = derivative_explicit(args.kind, args.n, args.s).to_json()
        elif args.method == "triple-sum":
            if args.kind != "U":
                raise UsageError("--method triple-sum is only defined for --kind U")
            result = u_derivative_triple_sum(args.n, args.s).to_json()
        else:
            result = derivative_oracle(args.n, args.s, args.kind).to_json()
        return EXIT_OK, _dump(result)

    if cmd == "invert":
        return EXIT_OK, _dump(monomial_power_to_u(args.power).to_json())

    if cmd == "matrix":
        m = diff_matrix(args.kind, args.s, args.n_max)
        return EXIT_OK, m.to_csv() if args.format == "csv" else _dump(m.to_json())

    if cmd == "eval":
        value = clenshaw_eval(ChebExpansion(args.kind, {args.n: 1}), args.at)
        return EXIT_OK, format_rational(value) + "\n"

    if cmd == "verify":
        reports = verify_all(args.n_max) if args.suite == "all" else [verify_suite(args.suite, args.n_max)]
        text = "".join(r.dumps() + "\n" for r in reports)
        return (EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED), text

    if cmd == "bench":
        if args.s > args.n_max:
            raise UsageError("bench requires --s <= --n-max")
        return EXIT_OK, format_bench(run_bench(args.n_max, args.s))

    raise UsageError(f"unknown command {cmd!r}")


def run_cli(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, text = _execute(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except BenchMismatchError as exc:
        print(f"chebderiv: {exc}", file=stderr)
        return EXIT_FAILED
    except SystemExit as exc:
        # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
