"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 digraph parse error, 3 counterexample
(a campaign potential counterexample or a violated lemma).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .digraph import Digraph, DigraphParseError, format_digraph, parse_digraph
from .families import FAMILY_NAMES, build_family, recognize
from .harness import DEFAULT_MAX_P, check_theorem, run_campaign
from .lemmas import (LEMMA4_VARIANTS, Lemma6Params, Status, lemma1_check, lemma2_check, lemma3_check,
                     lemma4_check, lemma5_check, lemma6_check)
from .spectrum import Cycle, cycle_spectrum

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vertices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}")


def _load(path: str) -> Digraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    return parse_digraph(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pancyclic", description="Cycle spectra, exceptional families and lemma checks for digraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="print the cycle-length spectrum")
    p.add_argument("file")

    p = sub.add_parser("family", help="emit the default instance of a family")
    p.add_argument("name", choices=FAMILY_NAMES)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--prime", action="store_true", help="H'(2m) instead of H(2m)")
    p.add_argument("--orientation", choices=("in", "out"), default="in", help="H(m,m-1,1) orientation")

    p = sub.add_parser("recognize", help="identify the exceptional family, if any")
    p.add_argument("file")

    p = sub.add_parser("check", help="theorem verdict for one digraph")
    p.add_argument("file")

    p = sub.add_parser("lemma", help="evaluate one lemma on a digraph")
    p.add_argument("file")
    p.add_argument("--id", required=True, choices=("1", "2", "3", "4", "5", "6"))
    p.add_argument("--x", type=int, required=True, help="the external vertex")
    p.add_argument("--cycle", type=_vertices, help="cycle vertices x_1,...,x_k")
    p.add_argument("--path", type=_vertices, help="path vertices x_1,...,x_n")
    p.add_argument("--n", type=int, help="target cycle length (lemmas 3 and 6)")
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--variant", choices=LEMMA4_VARIANTS)

    p = sub.add_parser("campaign", help="seeded theorem-verification campaign")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=1, help="default: 1")
    p.add_argument("--max-p", type=int, default=DEFAULT_MAX_P)
    p.add_argument("--out", default="counterexamples", help="directory for counterexample files")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"lemma {args.id} needs " + ", ".join("--" + n for n in missing))


def _lemma(args) -> int:
    d = _load(args.file)
    lid = args.id
    if lid in ("1", "3", "5", "6"):
        _require(args, "cycle")
    if lid in ("2", "4"):
        _require(args, "path")
    if lid == "1":
        report = lemma1_check(d, args.cycle, args.x)
    elif lid == "2":
        report = lemma2_check(d, args.path, args.x)
    elif lid == "3":
        _require(args, "n")
        report = lemma3_check(d, args.cycle, args.x, args.n)
    elif lid == "4":
        _require(args, "variant")
        report = lemma4_check(d, args.path, args.x, args.variant)
    elif lid == "5":
        report = lemma5_check(d, args.cycle, args.x)
    else:
        _require(args, "n", "k", "a")
        report = lemma6_check(d, Lemma6Params(args.k, args.a, args.n, Cycle(tuple(args.cycle)), args.x))
    print(report)
    return EXIT_COUNTEREXAMPLE if report.status is Status.VIOLATED else EXIT_OK


def run(args) -> int:
    if args.command == "spectrum":
        spec = cycle_spectrum(_load(args.file))
        print(f"spectrum={spec.as_text()} pancyclic={str(spec.pancyclic).lower()} "
              f"hamiltonian={str(spec.hamiltonian).lower()}")
        return EXIT_OK
    if args.command == "family":
        sys.stdout.write(format_digraph(build_family(args.name, args.m, args.prime, args.orientation)))
        return EXIT_OK
    if args.command == "recognize":
        label = recognize(_load(args.file))
        print(label.describe() if label else "none")
        return EXIT_OK
    if args.command == "check":
        print(check_theorem(_load(args.file)))
        return EXIT_OK
    if args.command == "lemma":
        return _lemma(args)
    if args.command == "campaign":
        report = run_campaign(args.p, args.samples, args.seed, max_p=args.max_p,
                              out_dir=args.out, workers=args.workers)
        sys.stdout.write(report.format(include_runtime=False))
        print(f"runtime: {report.runtime:.2f}s", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except DigraphParseError as exc:
        print(f"pancyclic: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, ValueError) as exc:
        print(f"pancyclic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
