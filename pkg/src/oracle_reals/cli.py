"""
Command line calculator over exact reals.

    oracle-calc eval "root(2,2)*(e+pi)" --eps 1/1000
    oracle-calc member pi 3.14:3.15
    oracle-calc cf "root(11,3)" --terms 10
    oracle-calc dec pi --digits 6 --mode trunc
    oracle-calc cmp "root(2,2)" "root(3,2)" --eps 1/100
    oracle-calc repl

Exit codes: 0 success, 1 invalid input, 2 parse error, 3 domain error
(possible division by zero), 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import shlex
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .core import DEFAULT_BUDGET
from .errors import BudgetExceeded, DomainError, InvalidInput, ParseError
from .expr import comparison, continued_fraction, decimal, evaluate, member
from .interval import DecimalMode, as_rational, parse_interval

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3, 4

_MODES = {m.value: m for m in DecimalMode}


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ParseError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def default_budget() -> int:
    raw = os.environ.get("ORACLE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return _positive_int(raw)
    except argparse.ArgumentTypeError:
        return DEFAULT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oracle-calc", description="Exact real calculator.")
    parser.add_argument("--budget", type=_positive_int, default=None,
                        help=f"refinement budget (default {DEFAULT_BUDGET} or $ORACLE_BUDGET)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="Yes interval of length at most eps")
    p.add_argument("expr")
    p.add_argument("--eps", type=_rational, default=Fraction(1, 10 ** 6))

    p = sub.add_parser("member", help="ask whether an interval holds the value")
    p.add_argument("expr")
    p.add_argument("interval", help='"p/q:r/s" or decimal endpoints')

    p = sub.add_parser("cf", help="continued fraction terms")
    p.add_argument("expr")
    p.add_argument("--terms", type=_positive_int, default=10)

    p = sub.add_parser("dec", help="decimal text with its implied bracket")
    p.add_argument("expr")
    p.add_argument("--digits", type=_positive_int, default=6)
    p.add_argument("--mode", choices=sorted(_MODES), default="trunc")

    p = sub.add_parser("cmp", help="order two values")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--eps", type=_rational, default=Fraction(1, 10 ** 6))

    sub.add_parser("repl", help="read commands from standard input")
    return parser


def run(args: argparse.Namespace, out: TextIO) -> None:
    budget = args.budget if args.budget is not None else default_budget()
    if args.command == "eval":
        print(evaluate(args.expr, args.eps, budget), file=out)
    elif args.command == "member":
        print(member(args.expr, parse_interval(args.interval), budget), file=out)
    elif args.command == "cf":
        print(continued_fraction(args.expr, args.terms, budget), file=out)
    elif args.command == "dec":
        print(decimal(args.expr, args.digits, _MODES[args.mode], budget), file=out)
    elif args.command == "cmp":
        print(comparison(args.left, args.right, args.eps, budget)[1], file=out)


def execute(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    """Run one command and map failures to exit codes."""
    try:
        run(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=err)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        detail = f" (partial: {exc.partial})" if exc.partial is not None else ""
        print(f"budget exhausted: {exc}{detail}", file=err)
        return EXIT_BUDGET
    except (InvalidInput, ZeroDivisionError) as exc:
        print(f"invalid input: {exc}", file=err)
        return EXIT_INVALID
    return EXIT_OK


def repl(parser: argparse.ArgumentParser, budget: int | None, stdin: TextIO,
         out: TextIO, err: TextIO) -> int:
    interactive = stdin.isatty()
    status = EXIT_OK
    while True:
        if interactive:
            print("> ", end="", file=out, flush=True)
        line = stdin.readline()
        if not line:
            return status
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("quit", "exit"):
            return status
        try:
            words = shlex.split(line)
            if budget is not None and "--budget" not in words:
                words = ["--budget", str(budget), *words]
            args = parser.parse_args(words)
        except (ValueError, SystemExit):
            print(f"could not read command: {line}", file=err)
            status = EXIT_PARSE
            continue
        if args.command == "repl":
            continue
        status = execute(args, out, err)


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # exact endpoints can run to many digits
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "repl":
        return repl(parser, args.budget, sys.stdin, sys.stdout, sys.stderr)
    return execute(args, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
