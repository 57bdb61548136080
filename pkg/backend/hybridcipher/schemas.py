from __future__ import annotations

import math
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .models import (
    ALPHABET,
    AnalysisReport,
    Dispersion,
    FriedmanConstants,
    KasiskiResult,
    NormalizedText,
    ShiftCoincidence,
)


class InputDigest(BaseModel):
    length: int
    letters: int
    letters_only: bool

    @classmethod
    def of(cls, message: NormalizedText) -> "InputDigest":
        return cls(
            length=message.original_length,
            letters=len(message.letters),
            letters_only=not message.removed,
        )


class AnalysisParameters(BaseModel):
    english_table: str
    min_ngram: int
    max_ngram: int
    max_shift: int
    friedman: FriedmanConstants


class FigureComparison(BaseModel):
    name: str
    computed: Optional[float] = None
    reported: float
    reproduced: bool
    note: Optional[str] = None


class ReportedFigures(BaseModel):
    """Statistics published elsewhere for a ciphertext, to compare against."""

    source: Optional[str] = None
    ic: Optional[float] = None
    keyword_length: Optional[float] = None
    chi2_english: Optional[float] = None
    chi2_uniform: Optional[float] = None
    variance: Optional[float] = None
    std_dev: Optional[float] = None
    entropy_bits: Optional[float] = None
    english_variance: Optional[float] = None
    english_std_dev: Optional[float] = None


class ReportDocument(BaseModel):
    # The first nine fields are the fixed report schema; the rest is context.
    n: int
    ic: float
    chi2_english: float
    chi2_uniform: float
    entropy_bits: float
    variance: float
    std_dev: float
    friedman_keylen: Optional[float]
    counts: Dict[str, int]
    friedman_stable: bool
    dispersion: List[Dispersion] = Field(default_factory=list)
    kasiski_top_factors: List[int] = Field(default_factory=list)
    shift_coincidences: List[ShiftCoincidence] = Field(default_factory=list)
    english_variance: Optional[float] = None
    english_std_dev: Optional[float] = None
    input: InputDigest
    parameters: AnalysisParameters
    version: str
    comparison: Optional[List[FigureComparison]] = None

    @classmethod
    def from_report(
        cls,
        report: AnalysisReport,
        digest: InputDigest,
        parameters: AnalysisParameters,
        version: str,
        comparison: Optional[List[FigureComparison]] = None,
    ) -> "ReportDocument":
        keylen = report.friedman.value
        baseline = report.english_baseline
        return cls(
            n=report.profile.total,
            ic=report.ic,
            chi2_english=report.chi2_english,
            chi2_uniform=report.chi2_uniform,
            entropy_bits=report.entropy_bits,
            variance=report.variance,
            std_dev=report.std_dev,
            friedman_keylen=keylen if math.isfinite(keylen) else None,
            counts=dict(zip(ALPHABET, report.profile.counts)),
            friedman_stable=report.friedman.stable,
            dispersion=list(report.dispersion),
            kasiski_top_factors=report.kasiski.top_factors(),
            shift_coincidences=list(report.coincidences),
            english_variance=baseline.variance if baseline else None,
            english_std_dev=baseline.std_dev if baseline else None,
            input=digest,
            parameters=parameters,
            version=version,
            comparison=comparison,
        )


class KasiskiDocument(BaseModel):
    n: int
    min_ngram: int
    top_factors: List[int]
    result: KasiskiResult
    coincidences: List[ShiftCoincidence] = Field(default_factory=list)


class TextLayout(BaseModel):
    """Non-letter characters stripped before encryption, for later re-insertion."""

    model_config = ConfigDict(frozen=True)

    original_length: int = Field(ge=0)
    removed: List[Tuple[int, str]] = Field(default_factory=list)

    @classmethod
    def of(cls, message: NormalizedText) -> "TextLayout":
        return cls(original_length=message.original_length, removed=list(message.removed))

    @property
    def letter_count(self) -> int:
        return self.original_length - len(self.removed)

    def restore(self, letters: Sequence[int]) -> str:
        template = NormalizedText(
            letters=tuple(letters[: self.letter_count]),
            original_length=self.original_length,
            removed=tuple(self.removed),
        )
        return template.reinsert()


class CandidateLine(BaseModel):
    rank: int
    plaintext: str
    score: float
    coverage: int


class ChartRow(BaseModel):
    letter: str
    count: int
    percent: float
