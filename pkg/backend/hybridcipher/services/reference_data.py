from __future__ import annotations

import csv
import logging
import math
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, Optional, Union

from pydantic import ValidationError

from ..errors import ReferenceDataError
from ..models import ALPHABET, FriedmanConstants, ReferenceDistribution
from ..schemas import ReportedFigures
from ..settings import settings

logger = logging.getLogger("hybridcipher")

PathLike = Union[str, Path]

TABLE_TOLERANCE = 1e-6


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ReferenceDataError(f"cannot read {path}: {exc}") from exc


def parse_reference_table(text: str, source: str = "<table>") -> ReferenceDistribution:
    """Parses `LETTER,probability` rows; all 26 letters exactly once, summing to 1."""
    rows = [
        (line_number, row)
        for line_number, row in enumerate(csv.reader(text.splitlines()), start=1)
        if row and any(cell.strip() for cell in row)
    ]
    if len(rows) != len(ALPHABET):
        raise ReferenceDataError(f"{source}: expected 26 rows, found {len(rows)}")

    probs: Dict[str, float] = {}
    for line_number, row in rows:
        if len(row) != 2:
            raise ReferenceDataError(f"{source}:{line_number}: expected LETTER,probability")
        letter = row[0].strip().upper()
        if len(letter) != 1 or letter not in ALPHABET:
            raise ReferenceDataError(f"{source}:{line_number}: {row[0]!r} is not a letter")
        if letter in probs:
            raise ReferenceDataError(f"{source}:{line_number}: duplicate letter {letter}")
        try:
            prob = float(row[1])
        except ValueError as exc:
            raise ReferenceDataError(
                f"{source}:{line_number}: probability for {letter} is not a number"
            ) from exc
        if not math.isfinite(prob) or prob < 0:
            raise ReferenceDataError(
                f"{source}:{line_number}: probability for {letter} must be non-negative"
            )
        probs[letter] = prob

    total = math.fsum(probs.values())
    if abs(total - 1.0) > TABLE_TOLERANCE:
        raise ReferenceDataError(f"{source}: probabilities sum to {total:.9f}, expected 1")
    return ReferenceDistribution(probs=tuple(probs[letter] / total for letter in ALPHABET))


@lru_cache(maxsize=8)
def _cached_table(path: Path) -> ReferenceDistribution:
    logger.debug("Loading reference table from %s", path)
    return parse_reference_table(_read(path), source=str(path))


def load_reference_table(path: Optional[PathLike] = None) -> ReferenceDistribution:
    return _cached_table(Path(path or settings.english_table_path).resolve())


@lru_cache(maxsize=4)
def _cached_lexicon(path: Path) -> FrozenSet[str]:
    logger.debug("Loading lexicon from %s", path)
    words = set()
    for line in _read(path).splitlines():
        word = line.strip().upper()
        if not word or word.startswith("#"):
            continue
        if not word.isascii() or not word.isalpha():
            raise ReferenceDataError(f"{path}: lexicon entry {line.strip()!r} is not A-Z")
        words.add(word)
    return frozenset(words)


def load_lexicon(path: Optional[PathLike] = None) -> FrozenSet[str]:
    return _cached_lexicon(Path(path or settings.lexicon_path).resolve())


def load_friedman_constants(path: Optional[PathLike] = None) -> FriedmanConstants:
    source = Path(path or settings.constants_path)
    try:
        return FriedmanConstants.model_validate_json(_read(source))
    except ValidationError as exc:
        raise ReferenceDataError(f"{source}: invalid Friedman constants: {exc}") from exc


def load_reported_figures(path: Optional[PathLike] = None) -> ReportedFigures:
    source = Path(path or settings.reported_figures_path)
    try:
        return ReportedFigures.model_validate_json(_read(source))
    except ValidationError as exc:
        raise ReferenceDataError(f"{source}: invalid reported figures: {exc}") from exc
