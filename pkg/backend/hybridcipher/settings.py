from __future__ import annotations

import os
from pathlib import Path
from typing import Optional


def _parse_int(value: Optional[str], default: int) -> int:
    if value is None:
        return default
    try:
        parsed = int(value)
    except ValueError:
        return default
    if parsed <= 0:
        return default
    return parsed


class Settings:
    def __init__(self) -> None:
        base_dir = Path(__file__).resolve().parents[1]
        data_dir = base_dir / "data"
        self.data_dir = data_dir
        self.english_table_path = Path(
            os.getenv("HYBRIDCIPHER_ENGLISH_TABLE", data_dir / "english.csv")
        )
        self.lexicon_path = Path(
            os.getenv("HYBRIDCIPHER_LEXICON", data_dir / "words.txt")
        )
        self.constants_path = Path(
            os.getenv("HYBRIDCIPHER_CONSTANTS", data_dir / "constants.json")
        )
        self.reported_figures_path = data_dir / "reported_figures.json"
        self.log_level = os.getenv("HYBRIDCIPHER_LOG_LEVEL", "WARNING")
        self.max_candidates = _parse_int(
            os.getenv("HYBRIDCIPHER_MAX_CANDIDATES"), 10_000
        )
        self.min_ngram = _parse_int(os.getenv("HYBRIDCIPHER_MIN_NGRAM"), 3)
        self.max_ngram = _parse_int(os.getenv("HYBRIDCIPHER_MAX_NGRAM"), 10)
        self.max_shift = _parse_int(os.getenv("HYBRIDCIPHER_MAX_SHIFT"), 20)


settings = Settings()
