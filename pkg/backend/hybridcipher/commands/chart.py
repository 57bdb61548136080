from __future__ import annotations

import argparse

from ..models import ChartFormat
from ..services.charts import emit_chart
from ..services.cryptanalysis import frequency_profile
from ..services.text_codec import normalize
from .common import CommandIO, add_io_arguments, read_input, write_output


def register(subparsers) -> None:
    parser = subparsers.add_parser("chart", help="letter frequency chart")
    add_io_arguments(parser)
    parser.add_argument(
        "--format",
        choices=[item.value for item in ChartFormat],
        default=ChartFormat.csv.value,
    )
    parser.set_defaults(handler=run_chart)


def run_chart(args: argparse.Namespace, io: CommandIO) -> int:
    profile = frequency_profile(normalize(read_input(args, io)))
    write_output(args, io, emit_chart(profile, args.format))
    return 0
