from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any, Dict, List

from pydantic import TypeAdapter

from ..schemas import CandidateLine, ChartRow, KasiskiDocument, ReportDocument, TextLayout
from .common import CommandIO, write_output

DOCUMENTS: Dict[str, TypeAdapter] = {
    "report": TypeAdapter(ReportDocument),
    "kasiski": TypeAdapter(KasiskiDocument),
    "candidate": TypeAdapter(CandidateLine),
    "chart": TypeAdapter(List[ChartRow]),
    "layout": TypeAdapter(TextLayout),
}


def document_schema(name: str) -> Dict[str, Any]:
    return DOCUMENTS[name].json_schema(mode="serialization")


def register(subparsers) -> None:
    parser = subparsers.add_parser("schema", help="JSON schema of a document the CLI writes")
    parser.add_argument("document", choices=sorted(DOCUMENTS))
    parser.add_argument("--out", dest="output_path", type=Path)
    parser.set_defaults(handler=run_schema)


def run_schema(args: argparse.Namespace, io: CommandIO) -> int:
    write_output(args, io, json.dumps(document_schema(args.document), indent=2) + "\n")
    return 0
