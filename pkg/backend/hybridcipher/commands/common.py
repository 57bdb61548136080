from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

from ..models import PaddingPolicy
from ..schemas import TextLayout


def positive_int(value: str) -> int:
    try:
        parsed = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from exc
    if parsed <= 0:
        raise argparse.ArgumentTypeError(f"{value!r} must be positive")
    return parsed


@dataclass
class CommandIO:
    stdin: TextIO
    stdout: TextIO
    stderr: TextIO


def add_io_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input_path", type=Path, help="read input from FILE instead of stdin")
    parser.add_argument("--out", dest="output_path", type=Path, help="write output to FILE instead of stdout")


def add_padding_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--pad",
        type=PaddingPolicy.parse,
        default=PaddingPolicy.first_key_char(),
        metavar="POLICY",
        help="first-key-char (default), none, or a pad letter such as X",
    )


def read_input(args: argparse.Namespace, io: CommandIO) -> str:
    if args.input_path is not None:
        return args.input_path.read_text(encoding="utf-8")
    return io.stdin.read()


def write_output(args: argparse.Namespace, io: CommandIO, text: str) -> None:
    if args.output_path is not None:
        args.output_path.write_text(text, encoding="utf-8")
    else:
        io.stdout.write(text)


def read_layout(path: Optional[Path]) -> Optional[TextLayout]:
    if path is None:
        return None
    return TextLayout.model_validate_json(path.read_text(encoding="utf-8"))


def write_layout(path: Optional[Path], layout: TextLayout) -> None:
    if path is not None:
        path.write_text(layout.model_dump_json(indent=2) + "\n", encoding="utf-8")

