"""
Command-line front end.

    magnus-perm gen --order 3 --basis words --format text
    magnus-perm gen --order 4 --basis rnested --anchor first --format latex
    magnus-perm bch --order 3
    magnus-perm verify --problem skew2 --order 2
    magnus-perm hopf-check --max-grade 4

Exit codes: 0 success, 1 verification failure, 2 order above the cap
(use ``--force`` or ``$MAGNUS_MAX_ORDER``), 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import magnus, serialize
from .bch import bch_words
from .hopf_checks import run_checks
from .numerics import get_problem, verify
from .numerics.problems import PROBLEMS

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CAP = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0 or v >= 1 << 64:
        raise argparse.ArgumentTypeError(f"must be in [0, 2^64), got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="magnus-perm", description="Exact Magnus expansion terms and their numerical checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_flags(p, formats=True):
        if formats:
            p.add_argument("--format", choices=["text", "json", "latex"], default="text")
        p.add_argument("--json", metavar="PATH", help="also write the JSON document to PATH")

    gen = sub.add_parser("gen", help="generate Ω_n")
    gen.add_argument("--order", type=_positive_int, required=True)
    gen.add_argument("--basis", choices=["words", "rnested"], default="words")
    gen.add_argument("--anchor", choices=["first", "last"], default="first")
    gen.add_argument("--route", choices=["closed", "log"], default="closed",
                     help="word basis only: closed descent formula or logarithm of the Neumann series")
    gen.add_argument("--force", action="store_true", help="ignore the order cap")
    output_flags(gen)

    bch = sub.add_parser("bch", help="homogeneous BCH term Z_n(X, Y) as words")
    bch.add_argument("--order", type=_positive_int, required=True)
    bch.add_argument("--route", choices=["words", "rnested"], default="words")
    bch.add_argument("--force", action="store_true")
    output_flags(bch)

    ver = sub.add_parser("verify", help="numerical check of a truncated Magnus series")
    ver.add_argument("--problem", choices=sorted(PROBLEMS), required=True)
    ver.add_argument("--order", type=_positive_int, required=True)
    ver.add_argument("--t", type=float, default=None)
    ver.add_argument("--evaluator", choices=["exact", "mc"], default="exact")
    ver.add_argument("--samples", type=_positive_int, default=100_000)
    ver.add_argument("--seed", type=_nonneg_int, default=0)
    output_flags(ver, formats=False)

    hc = sub.add_parser("hopf-check", help="check the Hopf algebra identities")
    hc.add_argument("--max-grade", type=_nonneg_int, default=None)
    hc.add_argument("--structure", choices=["both", "star", "starprime"], default="both")
    hc.add_argument("--seed", type=_nonneg_int, default=0)
    hc.add_argument("--spot-checks", type=_nonneg_int, default=10)
    output_flags(hc, formats=False)
    return parser


def _emit(series, fmt: str, json_path: str | None, order: int, basis: str | None = None) -> None:
    doc = serialize.series_to_json(series, order=order, basis=basis)
    serialize.validate_series(doc)
    if fmt == "json":
        sys.stdout.write(serialize.dumps(doc))
    elif fmt == "latex":
        sys.stdout.write(serialize.to_latex(series) + "\n")
    else:
        sys.stdout.write(serialize.to_text(series) + "\n")
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(serialize.dumps(doc))


def _write_json(doc: dict, path: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    sys.stdout.write(text)
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    cap = args.order if args.force else None
    if args.basis == "rnested":
        series = magnus.omega_rnested(args.order, args.anchor, cap=cap)
    elif args.route == "log":
        series = magnus.omega_via_log(args.order, cap=cap)
    else:
        series = magnus.omega_word(args.order, cap=cap)
    _emit(series, args.format, args.json, args.order)
    return EXIT_OK


def cmd_bch(args) -> int:
    cap = args.order if args.force else None
    series = bch_words(args.order, args.route, cap=cap)
    _emit(series, args.format, args.json, args.order, basis="bch")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.t is not None and not args.t > 0:
        raise UsageError("--t must be positive")
    report = verify(
        get_problem(args.problem), args.order, args.t, evaluator=args.evaluator, samples=args.samples, seed=args.seed
    )
    _write_json(report.to_dict(), args.json)
    return EXIT_OK if report.extra["passed"] else EXIT_FAILED


def cmd_hopf_check(args) -> int:
    report = run_checks(args.structure, args.max_grade, seed=args.seed, spot_checks=args.spot_checks)
    _write_json(report, args.json)
    return EXIT_OK if report["ok"] else EXIT_FAILED


COMMANDS = {"gen": cmd_gen, "bch": cmd_bch, "verify": cmd_verify, "hopf-check": cmd_hopf_check}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except magnus.ResourceLimitError as exc:
        print(f"magnus-perm: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UsageError as exc:
        print(f"magnus-perm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
