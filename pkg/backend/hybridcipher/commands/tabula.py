from __future__ import annotations

import argparse
from pathlib import Path

from ..services.vigenere import format_tabula_recta
from .common import CommandIO, write_output


def register(subparsers) -> None:
    parser = subparsers.add_parser("tabula", help="print the 26x26 tabula recta")
    parser.add_argument("--out", dest="output_path", type=Path)
    parser.set_defaults(handler=run_tabula)


def run_tabula(args: argparse.Namespace, io: CommandIO) -> int:
    write_output(args, io, format_tabula_recta() + "\n")
    return 0
