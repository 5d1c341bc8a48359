"""Command-line interface.

Exit codes: 0 success / decomposable / VALID / FOUND, 1 not decomposable /
INVALID / NONE, 2 usage or parse error, 3 a construction failed its own
verification, 4 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import formats, products, solver
from .errors import (BadOrder, BudgetExceeded, CycleDecompositionError,
                     InvalidFamily, NotApplicable, NotDecomposable,
                     VerificationFailed)
from .verify import Decomposition, canonicalize, verify

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INTERNAL, EXIT_BUDGET = 0, 1, 2, 3, 4
DEFAULT_CACHE_DIR = "./.cycle-cache"


def _emit(text, out_path=None):
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _budget(args):
    return solver.SearchBudget(max_nodes=args.node_budget, max_millis=args.time_budget)


def cmd_decide(args):
    family = formats.parse_family(args.family)
    verdict = products.decide(family, args.cycle_length)
    if args.format == "json":
        _emit(json.dumps({
            "family": formats.family_to_json(family),
            "k": verdict.k,
            "decomposable": verdict.decomposable,
            "clause": verdict.clause,
            "reason": verdict.reason,
        }, indent=2) + "\n")
    else:
        answer = "yes" if verdict.decomposable else "no"
        if verdict.clause == "generic-necessary":
            answer += " (necessary conditions only)"
        _emit(f"decomposable: {answer}\nclause: {verdict.clause}\nreason: {verdict.reason}\n")
    return EXIT_OK if verdict.decomposable else EXIT_NO


def _write_decomposition(dec: Decomposition, args):
    if args.format == "text":
        _emit(formats.format_text(dec), args.output)
    elif args.output in (None, "-"):
        _emit(formats.dumps(dec))
    else:
        formats.write_decomposition(dec, args.output)


def cmd_construct(args):
    family = formats.parse_family(args.family)
    try:
        dec = products.construct(family, args.cycle_length, budget=_budget(args),
                                 cache_dir=args.cache_dir)
    except VerificationFailed as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    dec = canonicalize(dec)
    cert = verify(dec)
    if not cert.valid or cert.cycle_count * args.cycle_length != cert.edge_count:
        print("internal error: construction does not verify\n" + cert.summary(), file=sys.stderr)
        return EXIT_INTERNAL
    _write_decomposition(dec, args)
    print(f"{cert.cycle_count} cycles of length {dec.k}, {cert.edge_count} edges", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args):
    try:
        dec = formats.read_decomposition(args.input)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.family:
        dec = Decomposition(formats.parse_family(args.family), dec.k, dec.cycles)
    if args.cycle_length is not None:
        dec = Decomposition(dec.family, args.cycle_length, dec.cycles)
    cert = verify(dec)
    print(cert.summary())
    return EXIT_OK if cert.valid else EXIT_NO


def cmd_oracle(args):
    family = formats.parse_family(args.family)
    outcome = solver.solve(family, args.cycle_length, _budget(args))
    print(f"{outcome.status} after {outcome.nodes_explored} nodes")
    if outcome.found:
        print(f"{len(outcome.decomposition)} cycles of length {args.cycle_length}")
        if args.output:
            _write_decomposition(outcome.decomposition, args)
        return EXIT_OK
    return EXIT_NO if outcome.status == solver.NONE else EXIT_BUDGET


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tensorcycles",
        description="Cycle decompositions of tensor products of complete graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    family_help = ("family and parameters, e.g. 'km-x-kn 5 4'; one of: "
                   + ", ".join(formats.FAMILY_SPECS))

    def add_common(p, default_format):
        p.add_argument("family", nargs="+", help=family_help)
        p.add_argument("-k", "--cycle-length", type=int, required=True)
        p.add_argument("--format", choices=("json", "text"), default=default_format)

    def add_search(p):
        p.add_argument("--node-budget", type=int, default=solver.SearchBudget.max_nodes)
        p.add_argument("--time-budget", type=int, default=solver.SearchBudget.max_millis,
                       metavar="MS", help="wall-clock limit in ms, 0 for none")

    p = sub.add_parser("decide", help="decide decomposability")
    add_common(p, "text")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", help="build and self-verify a decomposition")
    add_common(p, "json")
    p.add_argument("-o", "--output")
    p.add_argument("--cache-dir", default=DEFAULT_CACHE_DIR)
    add_search(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a decomposition file")
    p.add_argument("input")
    p.add_argument("--family", nargs="+", help="override the family recorded in the file")
    p.add_argument("-k", "--cycle-length", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact search for a decomposition")
    add_common(p, "json")
    p.add_argument("-o", "--output")
    add_search(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except NotDecomposable as exc:
        print(f"not decomposable: {exc}", file=sys.stderr)
        return EXIT_NO
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidFamily, BadOrder, NotApplicable, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CycleDecompositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
