"""Command-line driver for the verification suites.

Subcommands select which of the six suites run (``all`` runs every suite).
Exit codes: 0 when every check passes, 1 when at least one check fails,
2 on usage errors.  The JSON output is byte-identical for identical seed
and configuration; ``--timings`` adds per-check runtimes at the cost of
that reproducibility.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .report import SUITES, build_report, render_markdown

SUBCOMMAND_HELP = {
    "census": "discriminant-group type censuses and the 72-entry pairing "
              "table",
    "weil": "metaplectic image group, traces, decomposition, and the theta "
            "vector suite",
    "obstruction": "collapsed 6x6 action, dimension formula, Eisenstein "
                   "components, product weights",
    "lifting": "eta expansions, multiplier compatibility, and the additive "
               "lift fixture",
    "restriction": "lattice embedding, divisor restriction cases, and the "
                   "image subspaces",
    "geometry": "lines and cubics on the quartic, interpolation, and the "
                "degree-16 count",
    "all": "every suite above, in order",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="igusa",
        description="Run exact verification suites and emit a report.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "md"), default="json",
        help="output format (default: json; md is rendered from the same "
             "document)",
    )
    common.add_argument(
        "--seed", type=int, default=0, metavar="U64",
        help="random seed for the sample-based checks (default: 0)",
    )
    common.add_argument(
        "--box", type=int, default=3, metavar="INT",
        help="largest enumeration half-width for the restriction suite; "
             "all half-widths from 3 up to this value run (default: 3)",
    )
    common.add_argument(
        "--trials", type=int, default=20, metavar="INT",
        help="number of degree-16 trials; 0 skips the numeric geometry "
             "checks (default: 20)",
    )
    common.add_argument(
        "--terms", type=int, default=30, metavar="INT",
        help="q-series truncation for the eta-product oracle (default: 30)",
    )
    common.add_argument(
        "--tolerance", type=float, default=1e-6, metavar="FLOAT",
        help="relative tolerance for the numeric Eisenstein oracle "
             "(default: 1e-6)",
    )
    common.add_argument(
        "--out", metavar="PATH", default=None,
        help="write the report to this path instead of stdout",
    )
    common.add_argument(
        "--timings", action="store_true",
        help="record per-check runtimes (makes the output nondeterministic)",
    )
    subparsers = parser.add_subparsers(dest="subcommand", metavar="SUITE")
    for name in (*SUITES, "all"):
        subparsers.add_parser(
            name, parents=[common], help=SUBCOMMAND_HELP[name],
            description=SUBCOMMAND_HELP[name],
        )
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.subcommand is None:
        parser.error("a suite is required (census, weil, obstruction, "
                     "lifting, restriction, geometry, or all)")
    if args.seed < 0 or args.seed >= 2**64:
        parser.error("--seed must fit in an unsigned 64-bit integer")
    if args.box < 3:
        parser.error("--box must be at least 3 (smaller boxes miss the "
                     "enumeration witnesses)")
    if args.trials < 0:
        parser.error("--trials must be nonnegative")
    if args.terms < 1:
        parser.error("--terms must be positive")
    if not args.tolerance > 0:
        parser.error("--tolerance must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # unknown flags exit 2 via argparse
    _validate(parser, args)

    document = build_report(
        args.subcommand,
        seed=args.seed,
        box=args.box,
        trials=args.trials,
        terms=args.terms,
        tolerance=args.tolerance,
        timings=args.timings,
    )
    payload = document.to_dict()
    if args.format == "md":
        text = render_markdown(payload)
    else:
        text = document.to_json()

    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 1 if document.failed else 0


if __name__ == "__main__":
    sys.exit(main())
