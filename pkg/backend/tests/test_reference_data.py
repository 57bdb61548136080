import math

import pytest

from hybridcipher.errors import ReferenceDataError
from hybridcipher.models import ALPHABET, FriedmanConstants
from hybridcipher.services.reference_data import (
    load_friedman_constants,
    load_lexicon,
    load_reference_table,
    load_reported_figures,
    parse_reference_table,
)

UNIFORM_ROWS = [f"{letter},{1 / 26!r}" for letter in ALPHABET]


def test_shipped_english_table():
    table = load_reference_table()
    assert math.fsum(table.probs) == pytest.approx(1.0, abs=1e-9)
    assert table.probs[ALPHABET.index("E")] == pytest.approx(0.12703, abs=1e-6)
    assert min(table.probs) > 0


def test_parse_accepts_whitespace_and_any_row_order():
    rows = list(reversed(UNIFORM_ROWS))
    rows[0] = " z , " + rows[0].split(",")[1]
    table = parse_reference_table("\n".join(rows) + "\n\n")
    assert table.probs[0] == pytest.approx(1 / 26)


def test_parse_renormalizes_small_drift():
    rows = [f"{letter},0.03846154" for letter in ALPHABET]
    table = parse_reference_table("\n".join(rows))
    assert math.fsum(table.probs) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize(
    "rows,message",
    [
        (UNIFORM_ROWS[:25], "expected 26 rows"),
        (UNIFORM_ROWS[:25] + ["A,0.0384615"], "duplicate letter A"),
        (UNIFORM_ROWS[:25] + ["Z,abc"], "not a number"),
        (UNIFORM_ROWS[:25] + ["Z,-0.1"], "non-negative"),
        (UNIFORM_ROWS[:25] + ["7,0.0384615"], "not a letter"),
        (UNIFORM_ROWS[:25] + ["Z,0.0384615,1"], "expected LETTER,probability"),
        ([f"{letter},0.03" for letter in ALPHABET], "sum to"),
    ],
)
def test_parse_rejects_malformed_tables(rows, message):
    with pytest.raises(ReferenceDataError, match=message):
        parse_reference_table("\n".join(rows), source="table.csv")


def test_load_reference_table_from_file(tmp_path):
    path = tmp_path / "uniform.csv"
    path.write_text("\n".join(UNIFORM_ROWS), encoding="utf-8")
    assert load_reference_table(path).probs[3] == pytest.approx(1 / 26)
    with pytest.raises(ReferenceDataError, match="cannot read"):
        load_reference_table(tmp_path / "missing.csv")


def test_shipped_lexicon_contains_forest_words():
    words = load_lexicon()
    for word in ["IN", "THE", "FOREST", "THERE", "ARE", "MANY", "TREES", "WITH", "SAME", "HEIGHT"]:
        assert word in words
    assert not any(word.startswith("#") for word in words)


def test_custom_lexicon(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("# comment\nhello\n\n  World \n", encoding="utf-8")
    assert load_lexicon(path) == frozenset({"HELLO", "WORLD"})
    bad = tmp_path / "bad.txt"
    bad.write_text("don't\n", encoding="utf-8")
    with pytest.raises(ReferenceDataError, match="not A-Z"):
        load_lexicon(bad)


def test_friedman_constants(tmp_path):
    assert load_friedman_constants() == FriedmanConstants()
    path = tmp_path / "constants.json"
    path.write_text('{"kappa_plaintext": -1}', encoding="utf-8")
    with pytest.raises(ReferenceDataError, match="invalid Friedman constants"):
        load_friedman_constants(path)


def test_reported_figures():
    figures = load_reported_figures()
    assert figures.chi2_uniform == 38.7778
    assert figures.ic == 0.0501
    assert figures.entropy_bits == 3.3305
