"""Argument parser for the s3vol command-line surface.

Six values are always given in the edge order e1..e6. The pairs of opposite
edges are (e1, e4), (e2, e5) and (e3, e6), and e1, e2, e3 meet at a vertex.
With the faces numbered 1..4, edge e1 lies on faces (1, 2), e2 on (1, 3),
e3 on (2, 3), e4 on (3, 4), e5 on (2, 4) and e6 on (1, 4).
"""

import argparse
import math
import sys
from typing import NoReturn


class S3VolArgumentParser(argparse.ArgumentParser):
    """ArgumentParser exiting with status 1 on parse errors."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def finite_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not a number") from None
    if not math.isfinite(number):
        raise argparse.ArgumentTypeError(f"'{value}' is not finite")
    return number


def sample_count(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not an integer") from None
    if number < 10_000:
        raise argparse.ArgumentTypeError("at least 10000 samples are required")
    return number


def _add_values(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument(
        "--angles",
        nargs=6,
        type=finite_float,
        metavar="θ",
        help="dihedral angles θ1..θ6",
    )
    group.add_argument(
        "--lengths",
        nargs=6,
        type=finite_float,
        metavar="l",
        help="edge lengths l1..l6",
    )
    parser.add_argument(
        "--degrees", action="store_true", help="values are given in degrees"
    )


def _add_json(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON on stdout")


def build_parser() -> S3VolArgumentParser:
    parser = S3VolArgumentParser(
        prog="s3vol",
        description="Volumes of spherical tetrahedra from dihedral angles or edge lengths.",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log INFO (-v) or DEBUG (-vv) messages to stderr",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    volume = commands.add_parser("volume", help="compute the volume")
    _add_values(volume)
    _add_json(volume)

    convert = commands.add_parser(
        "convert", help="convert angles to lengths or lengths to angles"
    )
    _add_values(convert)
    _add_json(convert)

    validate = commands.add_parser("validate", help="print the validity report")
    _add_values(validate)
    _add_json(validate)

    verify = commands.add_parser(
        "verify",
        help="run a verification suite; without values a random tetrahedron is drawn",
    )
    _add_values(verify, required=False)
    _add_json(verify)
    verify.add_argument(
        "--suite",
        choices=("lemma", "schlafli", "duality", "montecarlo"),
        default="lemma",
    )
    verify.add_argument("--n", type=sample_count, default=None, help="Monte-Carlo samples")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--workers", type=int, default=None)

    batch = commands.add_parser(
        "batch", help="compute volumes for the records of a CSV file"
    )
    batch.add_argument("--input", required=True, help="CSV file: id,mode,v1..v6,unit")
    batch.add_argument("--output", default=None, help="JSON output file (default stdout)")

    return parser


parser = build_parser()
