"""Command-line interface: `python -m markovcalc <command> ...`."""

import argparse
import logging
import sys
from typing import List, Optional

from .. import __version__
from ..errors import (
    ConfigError,
    EmptyLadder,
    EvaluationError,
    IntervalOrderError,
    MissingOneSided,
    ParseError,
    PreconditionFailed,
    WitnessNotContinuous,
)
from ..settings import settings
from .commands import COMMANDS, EXIT_EVALUATION, EXIT_INTERNAL, EXIT_USAGE
from .demos import DEMOS

logger = logging.getLogger(__name__)

SIDE_CHOICES = ("left", "right", "both")


def _add_ladder_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", choices=("exact", "float"), help="arithmetic for quotient values")
    parser.add_argument("--depth", type=int, help="number of ladder rungs looked at first")
    parser.add_argument("--tol", type=float, help="absolute convergence tolerance")
    parser.add_argument("--json", action="store_true", help="print a JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markovcalc",
        description="Markov derivatives of interval functions F(t) = [f(t), g(t)].",
        epilog="Points are constants such as 0, 1/2, sqrt2/4 or quad(1/2, -1); "
               "put `--` before a negative point.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log more (-vv for debug)")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("eval", help="print F(t)")
    p.add_argument("file", help="function definition file")
    p.add_argument("t", help="evaluation point")
    p.add_argument("--json", action="store_true", help="print a JSON report")

    p = sub.add_parser("diff", help="Markov derivative at x")
    p.add_argument("file", help="function definition file")
    p.add_argument("x", help="interior point")
    p.add_argument("--side", choices=SIDE_CHOICES, default="both", help="one-sided or two-sided limit")
    p.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--csv", metavar="PATH", help="write the oracle quotient trace as CSV")
    _add_ladder_flags(p)

    p = sub.add_parser("classify", help="case of the differentiability characterization at x")
    p.add_argument("file", help="function definition file")
    p.add_argument("x", help="interior point")
    p.add_argument("--witness", choices=("f", "g", "g-f"),
                   help="continuous expression licensing the [min, max] slope identity")
    _add_ladder_flags(p)

    p = sub.add_parser("demo", help="reproduce a worked example")
    p.add_argument("name", help=f"one of: {', '.join(DEMOS)}")
    p.add_argument("--mode", choices=("exact", "float"), help="arithmetic for quotient values")

    p = sub.add_parser("scan", help="classify evenly spaced points of an interval")
    p.add_argument("file", help="function definition file")
    p.add_argument("--from", dest="start", required=True, help="left end of the range")
    p.add_argument("--to", dest="stop", required=True, help="right end of the range")
    p.add_argument("--points", type=int, default=8, help="number of interior points")
    _add_ladder_flags(p)

    p = sub.add_parser("witness", help="check a linear-relation witness alpha*f + beta*g = c + d")
    p.add_argument("file", help="function definition file")
    p.add_argument("witness_file", help="witness definition file")
    p.add_argument("x", help="interior point")
    p.add_argument("--side", choices=SIDE_CHOICES, default="both", help="side(s) to check")
    _add_ladder_flags(p)
    return parser


def setup_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, str(settings.get("log_level", "WARNING")).upper(), logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return the exit code.

    0 on success, including derivatives that do not exist; 2 for usage and
    parse errors; 3 for evaluation and domain errors; 4 for failed checks and
    internal errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    setup_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (EvaluationError, EmptyLadder, IntervalOrderError, MissingOneSided,
            PreconditionFailed, WitnessNotContinuous) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EVALUATION
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:
        logger.exception("unexpected error")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
