from __future__ import annotations

import argparse
import logging
import sys
from contextlib import redirect_stdout
from typing import List, Optional, TextIO

from pydantic import ValidationError

from . import __version__
from .commands import COMMANDS
from .commands.common import CommandIO
from .errors import HybridCipherError
from .settings import settings

logger = logging.getLogger("hybridcipher")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class UsageError(Exception):
    def __init__(self, message: str, usage: str, prog: str) -> None:
        super().__init__(message)
        self.usage = usage
        self.prog = prog


class CommandParser(argparse.ArgumentParser):
    """Raises instead of exiting so run() owns the exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message, self.format_usage(), self.prog)


def create_parser() -> CommandParser:
    parser = CommandParser(
        prog="hybridcipher",
        description="Classical ciphers, a transposition-keyed Vigenère hybrid and its cryptanalysis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=settings.log_level.upper(),
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def _configure_logging(level_name: str, stream: TextIO) -> None:
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, stream=stream, format=LOG_FORMAT, force=True)
    logger.setLevel(level)


def run(
    argv: Optional[List[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    io = CommandIO(
        stdin=stdin or sys.stdin, stdout=stdout or sys.stdout, stderr=stderr or sys.stderr
    )
    parser = create_parser()
    try:
        with redirect_stdout(io.stdout):
            args = parser.parse_args(argv)
    except UsageError as exc:
        io.stderr.write(exc.usage)
        io.stderr.write(f"{exc.prog}: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    _configure_logging(args.log_level, io.stderr)
    try:
        return args.handler(args, io)
    except (HybridCipherError, ValidationError, OSError, UnicodeDecodeError) as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        io.stderr.write(f"error: {exc}\n")
        return EXIT_DATA


def main() -> None:
    raise SystemExit(run())
