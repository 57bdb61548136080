from __future__ import annotations

import csv
import io
import json
from typing import List, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from ..errors import HybridCipherError
from ..models import ALPHABET, ChartFormat, FrequencyProfile
from ..schemas import ChartRow

BAR_WIDTH = 50


def chart_rows(profile: FrequencyProfile) -> List[ChartRow]:
    return [
        ChartRow(letter=letter, count=count, percent=round(percent, 2))
        for letter, count, percent in zip(ALPHABET, profile.counts, profile.percentages())
    ]


def _csv(rows: List[ChartRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in rows:
        writer.writerow([row.letter, row.count, f"{row.percent:.2f}"])
    return buffer.getvalue()


def _ascii(profile: FrequencyProfile, rows: List[ChartRow]) -> str:
    peak = max(profile.counts)
    lines = []
    for row in rows:
        length = round(BAR_WIDTH * row.count / peak) if peak else 0
        lines.append(f"{row.letter} {'#' * length:<{BAR_WIDTH}} {row.count:>4} {row.percent:6.2f}%")
    return "\n".join(lines) + "\n"


def _svg(profile: FrequencyProfile) -> str:
    figure, axes = plt.subplots(figsize=(6, 8))
    try:
        positions = range(len(ALPHABET))
        axes.barh(positions, profile.counts, color="steelblue")
        axes.set_yticks(list(positions), list(ALPHABET))
        axes.invert_yaxis()
        axes.set_xlabel("count")
        axes.set_title(f"Letter frequency (N = {profile.total})")
        buffer = io.StringIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    finally:
        plt.close(figure)
    return buffer.getvalue()


def emit_chart(profile: FrequencyProfile, fmt: Union[ChartFormat, str]) -> str:
    """Renders the letter distribution as csv, json, ascii bars or svg bars."""
    try:
        chart_format = ChartFormat(fmt)
    except ValueError as exc:
        raise HybridCipherError(f"unknown chart format {fmt!r}") from exc

    rows = chart_rows(profile)
    if chart_format == ChartFormat.csv:
        return _csv(rows)
    if chart_format == ChartFormat.json:
        return json.dumps([row.model_dump() for row in rows], indent=2) + "\n"
    if chart_format == ChartFormat.ascii:
        return _ascii(profile, rows)
    return _svg(profile)
