#!/usr/bin/env python3

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from dotenv import find_dotenv, load_dotenv
from loguru import logger

from omnileib._meta import __version__
from omnileib.config import Config
from omnileib.linalg import InputError, VerificationError
from omnileib.logger import configure_console_logging

from . import catalog, checks, compute, management
from .errors import EXIT_INPUT, CLIError, report_exception, show_unknown_command_error

COMMANDS = [
    "validate",
    "cohomology",
    "omni-cohomology",
    "compare",
    "mc-check",
    "balavoine-selftest",
    "catalog",
    "config",
]


# --------------------------------------------------------------------------- #
# Load environment variables (.env)                                           #
# --------------------------------------------------------------------------- #
def load_environment() -> None:
    if Config.dotenv_disabled():
        return
    # 1. Current working directory and parents
    load_dotenv(find_dotenv(usecwd=True), override=False)
    # 2. Project root
    load_dotenv(Config.PROJECT_ROOT / ".env", override=False)
    # 3. User's home directory
    load_dotenv(Path.home() / ".env", override=False)


load_environment()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omnileib",
        description=(
            "Exact computations with Leibniz algebras, their representations, "
            "omni-representations and cohomology"
        ),
        epilog=(
            "Exit codes: 0 all checks passed, 1 a mathematical check failed, "
            "2 malformed or unknown input."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    parser.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")
    parser.add_argument("--quiet", "-q", action="store_true",
                        help="Suppress progress output (only show failures)")
    parser.add_argument("--output", "-o", help="Write the report to a file")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    subparsers = parser.add_subparsers(
        dest="resource",
        help="Available commands",
        metavar="<command>",
    )

    checks.add_validate_parser(subparsers)
    compute.add_cohomology_parser(subparsers)
    compute.add_omni_cohomology_parser(subparsers)
    compute.add_compare_parser(subparsers)
    checks.add_mc_check_parser(subparsers)
    checks.add_balavoine_parser(subparsers)
    catalog.add_catalog_parser(subparsers)
    management.add_config_parser(subparsers)
    return parser


def dispatch(args: argparse.Namespace, remaining: list[str]) -> int:
    """Route to the handler for ``args.resource``."""
    if args.resource == "validate":
        return checks.handle_validate_command(args, remaining)
    elif args.resource == "cohomology":
        return compute.handle_cohomology_command(args, remaining)
    elif args.resource == "omni-cohomology":
        return compute.handle_omni_cohomology_command(args, remaining)
    elif args.resource == "compare":
        return compute.handle_compare_command(args, remaining)
    elif args.resource == "mc-check":
        return checks.handle_mc_check_command(args, remaining)
    elif args.resource == "balavoine-selftest":
        return checks.handle_balavoine_command(args, remaining)
    elif args.resource == "catalog":
        return catalog.handle_catalog_commands(args, remaining)
    elif args.resource == "config":
        return management.handle_config_commands(args, remaining)
    else:
        show_unknown_command_error(str(args.resource), COMMANDS)


def _unknown_command(argv: Sequence[str]) -> Optional[str]:
    """First positional argument when it names no command."""
    skip = False
    for arg in argv:
        if skip:
            skip = False
        elif arg in ("-o", "--output"):
            skip = True
        elif not arg.startswith("-"):
            return None if arg in COMMANDS else arg
    return None


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` (default ``sys.argv[1:]``), run the command and return its exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()

    try:
        unknown = _unknown_command(argv)
        if unknown is not None and not any(a in ("-h", "--help", "--version") for a in argv):
            show_unknown_command_error(unknown, COMMANDS)

        args = parser.parse_args(argv)
        configure_console_logging(verbose=args.verbose)

        if args.resource is None:
            parser.print_help(sys.stderr)
            return EXIT_INPUT

        logger.debug(f"omnileib {' '.join(argv)}")
        return dispatch(args, [])
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    except (CLIError, InputError, VerificationError) as e:
        logger.debug(f"{type(e).__name__}: {e}")
        return report_exception(e)


def main():
    """Console entry point."""
    code = run()
    if code:
        sys.exit(code)


if __name__ == "__main__":
    main()
