"""Entry point for the cartwidth command line.

Examples::

    python main.py gen product:cycle:n=5,cycle:n=5 -o c5c5.gr
    python main.py bounds c5c5.gr --k 2 --emit-certificate c5c5.ref
    python main.py verify c5c5.ref c5c5.gr
    python main.py table "grid:n=2..4; torus:n=4..5" --format json
"""

import argparse
import sys

from dotenv import load_dotenv

from cli.commands import (
    EXIT_RESOURCE,
    EXIT_USAGE,
    cmd_bounds,
    cmd_gen,
    cmd_table,
    cmd_verify,
)
from graphs.exceptions import CartwidthError, InvariantViolation, ResourceLimitError
from user_data.user_config import UserConfig
from utils.logging import get_logger, setup_logging

logger = get_logger(__name__)


def _add_common_options(parser: argparse.ArgumentParser, default: object) -> None:
    flag_default = False if default is None else default
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=flag_default,
        help="Enable debug logging",
    )
    parser.add_argument(
        "--config", default=default, help="Path to a solver settings JSON file"
    )
    parser.add_argument(
        "--budget-ms",
        type=int,
        default=default,
        help="Time budget per exact solver run",
    )
    parser.add_argument(
        "--exact-ceiling",
        type=int,
        default=default,
        help="Largest graph handed to exact treewidth",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Treewidth bounds for cartesian products of k-connected graphs"
    )
    _add_common_options(parser, default=None)
    # the same options after the subcommand; absent ones keep the global value
    common = argparse.ArgumentParser(add_help=False)
    _add_common_options(common, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="Write a generated graph in PACE .gr format")
    gen.add_argument("spec", help="Family spec, e.g. pathpower:n=5,k=2")
    gen.add_argument("-o", "--output", help="Output path (default: stdout)")
    gen.set_defaults(handler=cmd_gen)

    bounds = sub.add_parser("bounds", parents=[common], help="Lower and upper treewidth bounds")
    bounds.add_argument("instance", help=".gr file with a factors comment, or a product spec")
    bounds.add_argument("--k", type=int, default=1, help="Connectivity parameter")
    bounds.add_argument(
        "--seed",
        type=int,
        help="Seed for refuter probes (default: default_seed from the settings, 0)",
    )
    bounds.add_argument("--emit-certificate", help="Write a certificate or transcript here")
    bounds.add_argument("--format", choices=["text", "json"], default="text")
    bounds.set_defaults(handler=cmd_bounds)

    verify = sub.add_parser("verify", parents=[common], help="Re-check a certificate against a graph")
    verify.add_argument("certificate", help="Bramble certificate, .td file or transcript")
    verify.add_argument("graph", help=".gr file or family spec of the host graph")
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.set_defaults(handler=cmd_verify)

    table = sub.add_parser("table", parents=[common], help="Bounds over a sweep of instances")
    table.add_argument("sweep", help='e.g. "grid:n=2..4; pathpower:n=5..6,k=2"')
    table.add_argument(
        "--seed",
        type=int,
        help="Seed for refuter probes and k-trees (default: default_seed, 0)",
    )
    table.add_argument("--format", choices=["text", "json"], default="text")
    table.add_argument("--json-out", help="Also write the rows as JSON here")
    table.set_defaults(handler=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point; returns the process exit code."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    load_dotenv()  # Load environment variables from .env file
    setup_logging(verbose=args.verbose)  # Set up application-wide logging

    config = UserConfig(args.config)
    settings = config.override(budget_ms=args.budget_ms, exact_ceiling=args.exact_ceiling)

    try:
        return args.handler(args, settings)
    except InvariantViolation:
        logger.exception("Internal invariant violated; this is a bug.")
        raise
    except ResourceLimitError as exc:
        logger.error(f"Resource limit: {exc}")
        return EXIT_RESOURCE
    except (CartwidthError, OSError) as exc:
        logger.error(f"{args.command}: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
