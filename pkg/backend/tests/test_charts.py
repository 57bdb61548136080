import json

import pytest

from hybridcipher.errors import HybridCipherError
from hybridcipher.models import ChartFormat
from hybridcipher.services.charts import chart_rows, emit_chart
from hybridcipher.services.cryptanalysis import frequency_profile


def test_csv_chart_of_forest_cipher(forest_cipher):
    lines = emit_chart(frequency_profile(forest_cipher), "csv").splitlines()
    assert len(lines) == 26
    assert lines[0] == "A,3,6.67"
    assert "I,7,15.56" in lines
    assert "B,0,0.00" in lines
    assert sum(int(line.split(",")[1]) for line in lines) == 45


def test_csv_chart_of_empty_profile():
    lines = emit_chart(frequency_profile(""), ChartFormat.csv).splitlines()
    assert len(lines) == 26
    assert all(line.endswith(",0,0.00") for line in lines)


def test_json_chart_mirrors_csv(forest_cipher):
    profile = frequency_profile(forest_cipher)
    rows = json.loads(emit_chart(profile, "json"))
    assert len(rows) == 26
    assert rows[8] == {"letter": "I", "count": 7, "percent": 15.56}
    csv_lines = emit_chart(profile, "csv").splitlines()
    assert [f"{row['letter']},{row['count']},{row['percent']:.2f}" for row in rows] == csv_lines


def test_ascii_bars_scale_to_peak(forest_cipher):
    lines = emit_chart(frequency_profile(forest_cipher), "ascii").splitlines()
    bars = {line[0]: line.count("#") for line in lines}
    assert bars["I"] == 50
    assert bars["M"] == 29
    assert bars["B"] == 0
    assert len(lines) == 26


def test_ascii_chart_of_empty_profile():
    lines = emit_chart(frequency_profile(""), "ascii").splitlines()
    assert all("#" not in line for line in lines)


def test_svg_chart(forest_cipher):
    document = emit_chart(frequency_profile(forest_cipher), "svg")
    assert "<svg" in document
    assert document.rstrip().endswith("</svg>")


def test_chart_rows_conserve_counts(forest_cipher):
    rows = chart_rows(frequency_profile(forest_cipher))
    assert sum(row.count for row in rows) == 45
    assert sum(row.percent for row in rows) == pytest.approx(100, abs=0.2)


def test_unknown_chart_format():
    with pytest.raises(HybridCipherError):
        emit_chart(frequency_profile("ABC"), "png")
