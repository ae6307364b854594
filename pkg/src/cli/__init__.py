"""
Command-line interface: argument parsing, subcommand handlers and exit statuses
"""

import asyncio
import logging
import sys
from typing import Callable, Optional, Sequence

from src.config import settings
from src.config.settings import load_settings_file
from src.core.errors import ComplexError, VerificationError

from .commands import EXIT_EXHAUSTED, EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION, handlers
from .parser import CliArgumentParser, build_parser

logger = logging.getLogger(__name__)

LoggingSetup = Callable[[str, Optional[str]], None]


async def run(argv: Optional[Sequence[str]] = None, setup_logging: Optional[LoggingSetup] = None) -> int:
    """Parse ``argv``, run the subcommand and map failures to exit statuses."""
    try:
        args = build_parser().parse_args(argv)
        overrides = load_settings_file(args.config) if args.config else {}
        if setup_logging:
            level = args.log_level or overrides.get("LOG_LEVEL", settings.LOG_LEVEL)
            setup_logging(level, overrides.get("LOG_FILE", settings.LOG_FILE))

        name = args.command if args.command != "covers" else f"covers {args.covers_command}"
        return await handlers[name](args, overrides)

    except VerificationError as e:
        logger.error(f"Verification failed: {e}")
        print(f"verification failed: {e}", file=sys.stderr)
        for reason in e.reasons:
            print(f"  - {reason}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ComplexError as e:
        logger.error(f"Command failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        report = getattr(e, "report", None)
        for issue in getattr(report, "issues", None) or []:
            print(f"  {issue}", file=sys.stderr)
        return EXIT_INPUT


def cli(argv: Optional[Sequence[str]] = None, setup_logging: Optional[LoggingSetup] = None) -> int:
    return asyncio.run(run(argv, setup_logging))


__all__ = [
    'run',
    'cli',
    'build_parser',
    'CliArgumentParser',
    'handlers',
    'EXIT_OK',
    'EXIT_VERIFICATION',
    'EXIT_EXHAUSTED',
    'EXIT_INPUT',
]
