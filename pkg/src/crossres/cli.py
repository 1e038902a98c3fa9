"""Command line front end.

Every command reads one presentation document (``--input``), prints a
plain-text report on standard output and exits 0 iff all checks pass.
Errors are reported as ``ERROR <code>: <message>`` with exit status 2.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import crossed
from .coset_oracle import DEFAULT_MAX_COSETS, CosetOverflow, enumerate_cosets
from .document import ParseError, parse, parse_level_word, render_word, symbol_name
from .report import Check, Report
from .skeleton import MAX_LEVEL, Skeleton, ValidationError
from .suites import peiffer_suite
from .words import StructureError

UNCHECKED = "note: that the identities generate pi_1 of the 1-skeleton is assumed, not checked"


class CommandError(Exception):
    def __init__(self, code: str, message: str):
        self.code, self.message = code, message
        super().__init__(message)


def _load(args) -> Skeleton:
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CommandError("INPUT", f"cannot read {args.input}: {exc.strerror}") from None
    try:
        data = parse(text)
    except ParseError as exc:
        raise CommandError(exc.code, str(exc)) from None
    try:
        return Skeleton(data, MAX_LEVEL)
    except ValidationError as exc:
        raise CommandError("IDENTITY", str(exc)) from None


def _table(sk: Skeleton, max_cosets: int = DEFAULT_MAX_COSETS):
    try:
        return enumerate_cosets(sk.data.presentation, max_cosets)
    except CosetOverflow:
        return None


def _header(sk: Skeleton) -> List[str]:
    p = sk.data.presentation
    return [f"generators: {len(p.generators)}", f"relators: {len(p.relators)}",
            f"identities: {len(sk.data.identities)}"]


def cmd_validate(args, out: List[str]) -> bool:
    sk = _load(args)
    out += _header(sk)
    report = Report()
    report.add(Check("identities have trivial d0 and d1", True, len(sk.data.identities)))
    report.extend(sk.cw_basis_check())
    out.append(report.render())
    out.append(UNCHECKED)
    return report.passed


def cmd_skeleton(args, out: List[str]) -> bool:
    sk = _load(args)
    if not 0 <= args.level <= MAX_LEVEL:
        raise CommandError("LEVEL", f"--level must lie in 0..{MAX_LEVEL}")
    sk = Skeleton(sk.data, args.level)
    for n, table in enumerate(sk.tables):
        out.append(f"level {n}: {len(table)} generators")
        out.append("  " + " ".join(symbol_name(s) for s in table) if table else "  (none)")
    report = sk.simplicial_identity_suite(args.samples, args.seed)
    out.append(report.render())
    return report.passed


def cmd_moore(args, out: List[str]) -> bool:
    sk = _load(args)
    n = args.level
    if not 1 <= n <= MAX_LEVEL:
        raise CommandError("LEVEL", f"--level must lie in 1..{MAX_LEVEL}")
    try:
        w = parse_level_word(sk.data, args.word, n)
    except ParseError as exc:
        raise CommandError(exc.code, str(exc)) from None
    out.append(f"word: {render_word(w)}")
    for i in range(n + 1):
        out.append(f"d{i}: {render_word(sk.d(i, w))}")
    member = sk.moore_member(n, w)
    out.append(f"moore member: {'yes' if member else 'no'}")
    if member:
        out.append(f"boundary: {render_word(sk.moore_boundary(n, w))}")
    return True


def cmd_peiffer(args, out: List[str]) -> bool:
    sk = _load(args)
    table = _table(sk)
    if table is None:
        out.append("note: coset table unavailable; quotient checks skipped (partial)")
    report = peiffer_suite(sk, table, args.dim, args.samples, args.seed)
    out.append(f"peiffer dimension {args.dim}, {args.samples} samples, seed {args.seed}")
    out.append(report.render())
    return report.passed


def cmd_cosets(args, out: List[str]) -> bool:
    sk = _load(args)
    try:
        table = enumerate_cosets(sk.data.presentation, args.max)
    except CosetOverflow as exc:
        raise CommandError("OVERFLOW", str(exc)) from None
    out.append(f"cosets: {table.order}")
    out.append(table.dump())
    return True


def cmd_crossed_complex(args, out: List[str]) -> bool:
    sk = _load(args)
    report = crossed.crossed_complex(sk, _table(sk), samples=args.samples, seed=args.seed)
    out.append(report.render())
    return report.passed


def cmd_word_system(args, out: List[str]) -> bool:
    sk = _load(args)
    try:
        out.append(crossed.export_word_system(sk).rstrip("\n"))
    except crossed.ConsistencyError as exc:
        raise CommandError("BOUNDARY", str(exc)) from None
    return True


COMMANDS = {
    "validate": cmd_validate,
    "skeleton": cmd_skeleton,
    "moore": cmd_moore,
    "peiffer": cmd_peiffer,
    "cosets": cmd_cosets,
    "crossed-complex": cmd_crossed_complex,
    "word-system": cmd_word_system,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="presentation document")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    common.add_argument("--samples", type=int, default=50, help="random samples per check")

    parser = argparse.ArgumentParser(prog="crossres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="parse and check construction data")
    p = sub.add_parser("skeleton", parents=[common], help="generator tables and simplicial identities")
    p.add_argument("--level", type=int, default=MAX_LEVEL)
    p = sub.add_parser("moore", parents=[common], help="faces and Moore membership of a word")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--word", required=True)
    p = sub.add_parser("peiffer", parents=[common], help="Peiffer pairing and generator suites")
    p.add_argument("--dim", type=int, choices=(1, 2), required=True)
    p = sub.add_parser("cosets", parents=[common], help="coset enumeration of G")
    p.add_argument("--max", type=int, default=DEFAULT_MAX_COSETS)
    sub.add_parser("crossed-complex", parents=[common], help="the crossed complex C2 -> C1 -> C0")
    sub.add_parser("word-system", parents=[common], help="export a Peiffer-Whitehead word system")
    return parser


def run(argv: Optional[List[str]] = None) -> tuple:
    """Run a command; returns ``(exit_status, report_text)``."""
    args = build_parser().parse_args(argv)
    out: List[str] = []
    try:
        ok = COMMANDS[args.command](args, out)
    except CommandError as exc:
        out.append(f"ERROR {exc.code}: {exc.message}")
        return 2, "\n".join(out) + "\n"
    except (StructureError, ValidationError) as exc:
        out.append(f"ERROR INVALID: {exc}")
        return 2, "\n".join(out) + "\n"
    return (0 if ok else 1), "\n".join(out) + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    status, text = run(argv)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
