"""``hypernum`` command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 semantic error,
3 axiom failure under ``--expect-pass``.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from ..core import Sign, parse_rational
from ..hyperadd import MAX_FOLD_LENGTH
from ..hyperaxioms import FIXTURES, TableError, load_fixture, parse_table
from . import render
from .expr import ParseError, SemanticError, eval_source, parse_literal, to_source, parse

EXIT_OK, EXIT_USAGE, EXIT_SEMANTIC, EXIT_AXIOMS = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _positive(*texts: str):
    values = [_rational(t) for t in texts]
    for t, v in zip(texts, values):
        if v <= 0:
            raise SemanticError(f"expected a positive rational, got {t}", 0)
    return values


def _sign(text: str) -> Sign:
    try:
        return Sign.from_symbol(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="hypernum", description="Exact three-sign hypernumber arithmetic.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    e = sub.add_parser("eval", help="evaluate an expression; '+' is hyperaddition, left-nested")
    e.add_argument("expr")
    e.add_argument("--trace", action="store_true", help="show every subexpression's value")
    e.add_argument("--json", action="store_true")

    b = sub.add_parser("brackets", help="evaluate every bracketing of a list of literals")
    b.add_argument("literals", nargs="+", metavar="LIT")
    b.add_argument("--json", action="store_true")

    d = sub.add_parser("defect", help="associativity defect of ((+ a), (- b), (L c))")
    d.add_argument("a")
    d.add_argument("b")
    d.add_argument("c")
    d.add_argument("--sweep", nargs=5, metavar=("AMIN", "AMAX", "BMIN", "BMAX", "STEP"),
                   help="emit a CSV grid of the defect at the given c")
    d.add_argument("--json", action="store_true")

    x = sub.add_parser("axioms", help="check hypergroup / hyperfield axioms on a finite table")
    src = x.add_mutually_exclusive_group(required=True)
    src.add_argument("name", nargs="?", help=f"bundled table: {', '.join(sorted(FIXTURES))}")
    src.add_argument("--file", type=Path, help="table file")
    x.add_argument("--expect-pass", action="store_true", help="exit 3 unless every axiom holds")
    x.add_argument("--json", action="store_true")

    v = sub.add_parser("envelope", help="sign hyper-sum versus reachable signs")
    v.add_argument("s")
    v.add_argument("t")
    v.add_argument("--json", action="store_true")

    a = sub.add_parser("ambient", help="ambient monoid trace of ((+ a), (- b), (L c))")
    a.add_argument("a")
    a.add_argument("b")
    a.add_argument("c")
    a.add_argument("--json", action="store_true")

    sub.add_parser("repl", help="read expressions from stdin and evaluate them")
    return p


def _emit(args, report: dict, text: str) -> None:
    sys.stdout.write(render.dumps(report) if args.json else text)


def cmd_eval(args) -> int:
    result = eval_source(args.expr, trace=args.trace)
    report = render.eval_report(to_source(parse(args.expr)), result)
    _emit(args, report, render.eval_text(result))
    return EXIT_OK


def cmd_brackets(args) -> int:
    if not 1 <= len(args.literals) <= MAX_FOLD_LENGTH:
        raise UsageError(f"brackets takes 1 to {MAX_FOLD_LENGTH} literals, got {len(args.literals)}")
    operands = [parse_literal(s) for s in args.literals]
    report = render.brackets_report(operands)
    _emit(args, report, render.brackets_text(report))
    return EXIT_OK


def cmd_defect(args) -> int:
    a, b, c = _positive(args.a, args.b, args.c)
    if args.sweep:
        amin, amax, bmin, bmax, step = _positive(*args.sweep)
        rows = render.sweep_rows(amin, amax, bmin, bmax, step, c)
        if args.json:
            sys.stdout.write(render.dumps({"command": "defect-sweep", "c": render.rat(c), "rows": rows}))
        else:
            sys.stdout.write(render.sweep_csv(rows))
        return EXIT_OK
    report = render.defect_report(a, b, c)
    _emit(args, report, render.defect_text(report))
    return EXIT_OK


def cmd_axioms(args) -> int:
    if args.file is not None:
        try:
            text = args.file.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        source = str(args.file)
        magma, mul_table = parse_table(text)
    else:
        if args.name not in FIXTURES:
            raise UsageError(f"unknown table {args.name!r}; choose from {', '.join(sorted(FIXTURES))}")
        source = args.name
        magma, mul_table = load_fixture(args.name)
    report, rep = render.axioms_report(source, magma, mul_table)
    _emit(args, report, render.axioms_text(report))
    if args.expect_pass and not rep.passed:
        return EXIT_AXIOMS
    return EXIT_OK


def cmd_envelope(args) -> int:
    report = render.envelope_report(_sign(args.s), _sign(args.t))
    _emit(args, report, render.envelope_text(report))
    return EXIT_OK


def cmd_ambient(args) -> int:
    a, b, c = _positive(args.a, args.b, args.c)
    report = render.ambient_report(a, b, c)
    _emit(args, report, render.ambient_text(report))
    return EXIT_OK


def cmd_repl(args) -> int:
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            sys.stdout.write("> ")
            sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            return EXIT_OK
        line = line.strip()
        if not line:
            continue
        if line in ("quit", "exit"):
            return EXIT_OK
        try:
            sys.stdout.write(render.eval_text(eval_source(line)))
        except (ParseError, SemanticError) as exc:
            sys.stdout.write(f"error: {exc}\n")


COMMANDS = {
    "eval": cmd_eval, "brackets": cmd_brackets, "defect": cmd_defect,
    "axioms": cmd_axioms, "envelope": cmd_envelope, "ambient": cmd_ambient, "repl": cmd_repl,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SemanticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (ParseError, TableError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
