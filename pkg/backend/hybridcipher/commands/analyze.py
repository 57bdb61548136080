from __future__ import annotations

import argparse
from pathlib import Path
from typing import List

from .. import __version__
from ..models import DispersionMode
from ..schemas import AnalysisParameters, InputDigest, ReportDocument
from ..services.cryptanalysis import analyze, compare_reported
from ..services.reference_data import (
    load_friedman_constants,
    load_reference_table,
    load_reported_figures,
)
from ..services.text_codec import normalize
from ..settings import settings
from .common import CommandIO, add_io_arguments, positive_int, read_input, write_output


def register(subparsers) -> None:
    parser = subparsers.add_parser("analyze", help="full statistics report for a ciphertext")
    add_io_arguments(parser)
    parser.add_argument("--english-table", type=Path, help="English monogram table (csv)")
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--min-ngram", type=positive_int, default=settings.min_ngram)
    parser.add_argument(
        "--max-ngram", type=positive_int, default=settings.max_ngram, help="longest repeat examined"
    )
    parser.add_argument(
        "--max-shift", type=positive_int, default=settings.max_shift, help="largest shift compared"
    )
    parser.add_argument(
        "--compare-reported",
        nargs="?",
        type=Path,
        const=settings.reported_figures_path,
        metavar="FILE",
        help="compare with published figures (default: the shipped sample figures)",
    )
    parser.set_defaults(handler=run_analyze)


def _text_report(document: ReportDocument) -> str:
    lines: List[str] = [
        f"letters            {document.n}",
        f"index of coinc.    {document.ic:.6f}",
        f"chi2 vs English    {document.chi2_english:.4f}",
        f"chi2 vs uniform    {document.chi2_uniform:.4f}",
        f"entropy (bits)     {document.entropy_bits:.4f}",
        f"variance           {document.variance:.4f}",
        f"std dev            {document.std_dev:.4f}",
    ]
    if document.friedman_keylen is None:
        lines.append("Friedman key len.  undefined")
    else:
        marker = "" if document.friedman_stable else " (unstable)"
        lines.append(f"Friedman key len.  {document.friedman_keylen:.4f}{marker}")
    factors = ", ".join(str(factor) for factor in document.kasiski_top_factors) or "none"
    lines.append(f"Kasiski factors    {factors}")
    for item in document.dispersion:
        lines.append(f"  {item.mode.value:<20} var {item.variance:.4f}  sd {item.std_dev:.4f}")
    if document.english_variance is not None:
        percents = next(
            item for item in document.dispersion if item.mode == DispersionMode.percents_over_26
        )
        spread = "larger" if percents.variance > document.english_variance else "smaller"
        lines.append(
            f"English baseline   var {document.english_variance:.4f}  sd {document.english_std_dev:.4f}"
            f" ({spread} spread in the text)"
        )
    for item in document.shift_coincidences:
        lines.append(
            f"shift {item.shift:>2}           {item.matches}/{item.compared}  kappa {item.kappa:.4f}"
        )
    lines.append("counts             " + " ".join(
        f"{letter}{count}" for letter, count in document.counts.items() if count
    ))
    for comparison in document.comparison or []:
        status = "reproduced" if comparison.reproduced else "NOT reproduced"
        computed = "n/a" if comparison.computed is None else f"{comparison.computed:.4f}"
        note = f" ({comparison.note})" if comparison.note else ""
        lines.append(
            f"reported {comparison.name:<15} {comparison.reported:.4f} vs {computed}: {status}{note}"
        )
    return "\n".join(lines) + "\n"


def run_analyze(args: argparse.Namespace, io: CommandIO) -> int:
    message = normalize(read_input(args, io))
    english = load_reference_table(args.english_table)
    constants = load_friedman_constants()
    report = analyze(
        message,
        english,
        constants,
        min_ngram=args.min_ngram,
        max_ngram=max(args.min_ngram, args.max_ngram),
        max_shift=args.max_shift,
    )

    comparison = None
    if args.compare_reported is not None:
        comparison = compare_reported(report, load_reported_figures(args.compare_reported))

    document = ReportDocument.from_report(
        report,
        digest=InputDigest.of(message),
        parameters=AnalysisParameters(
            english_table=str(args.english_table or settings.english_table_path),
            min_ngram=args.min_ngram,
            max_ngram=max(args.min_ngram, args.max_ngram),
            max_shift=args.max_shift,
            friedman=constants,
        ),
        version=__version__,
        comparison=comparison,
    )
    if args.format == "json":
        write_output(args, io, document.model_dump_json(indent=2) + "\n")
    else:
        write_output(args, io, _text_report(document))
    return 0
