from __future__ import annotations

import argparse

from ..schemas import KasiskiDocument
from ..services.cryptanalysis import coincidence_table, kasiski
from ..services.text_codec import normalize
from ..settings import settings
from .common import CommandIO, add_io_arguments, positive_int, read_input, write_output


def register(subparsers) -> None:
    parser = subparsers.add_parser("kasiski", help="repeated substrings and key-length factors")
    add_io_arguments(parser)
    parser.add_argument("--min-ngram", type=positive_int, default=settings.min_ngram)
    parser.add_argument(
        "--max-ngram", type=positive_int, default=settings.max_ngram, help="longest repeat reported"
    )
    parser.add_argument(
        "--max-shift", type=positive_int, default=settings.max_shift, help="largest shift compared"
    )
    parser.add_argument("--top", type=positive_int, default=3, help="number of factors to rank")
    parser.add_argument("--format", choices=["json", "text"], default="text")
    parser.set_defaults(handler=run_kasiski)


def run_kasiski(args: argparse.Namespace, io: CommandIO) -> int:
    message = normalize(read_input(args, io))
    result = kasiski(message, args.min_ngram, max(args.min_ngram, args.max_ngram))
    coincidences = coincidence_table(message, args.max_shift)
    top = result.top_factors(args.top)

    if args.format == "json":
        document = KasiskiDocument(
            n=len(message.letters),
            min_ngram=args.min_ngram,
            top_factors=top,
            result=result,
            coincidences=list(coincidences),
        )
        write_output(args, io, document.model_dump_json(indent=2) + "\n")
        return 0

    lines = ["top factors: " + (", ".join(str(factor) for factor in top) or "none")]
    for factor, count in result.factor_histogram.items():
        lines.append(f"  {factor:>2} {count}")
    for finding in result.findings:
        positions = ",".join(str(position) for position in finding.positions)
        distances = ",".join(str(distance) for distance in finding.distances)
        lines.append(f"{finding.substring} at {positions} distances {distances}")
    for item in coincidences:
        lines.append(f"shift {item.shift:>2}: {item.matches}/{item.compared} kappa {item.kappa:.4f}")
    write_output(args, io, "\n".join(lines) + "\n")
    return 0
