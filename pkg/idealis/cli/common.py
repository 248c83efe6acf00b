"""Plumbing shared by the command modules: global flags, logging, error exits."""

import argparse
import logging
import sys
from collections.abc import Callable

from ..config import get_settings, set_settings
from ..errors import IdealisError
from ..oracle import shutdown_pool_manager

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def add_global_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--threads",
        type=positive_int,
        default=None,
        help="Worker threads for oracle searches (default: IDEALIS_THREADS or 1); output does not depend on it",
    )
    parser.add_argument(
        "--max-ideals",
        type=positive_int,
        default=None,
        help="Cap on the ideals of a ring the oracle may enumerate (default: IDEALIS_MAX_IDEALS or 512)",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="count",
        default=0,
        help="Log progress to stderr (-v info, -vv debug)",
    )


def configure_logging(verbose: int) -> None:
    level = get_settings().log_level
    if verbose == 1:
        level = "INFO"
    elif verbose >= 2:
        level = "DEBUG"
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def execute(args: argparse.Namespace, handler: Callable[[argparse.Namespace], int]) -> int:
    """Run one command with settings overrides applied; map errors to exit codes."""
    try:
        configure_logging(args.verbose)
        set_settings(get_settings().with_overrides(threads=args.threads, max_ideals=args.max_ideals))
        return handler(args)
    except IdealisError as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    finally:
        shutdown_pool_manager()
        set_settings(None)
