from __future__ import annotations

import math
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

from .errors import AlignmentError, HybridCipherError, InvalidKeyError

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
ALPHABET_SIZE = len(ALPHABET)


def letters_to_text(letters: Sequence[int]) -> str:
    return "".join(ALPHABET[symbol] for symbol in letters)


def _check_symbols(values: Sequence[int], field: str) -> None:
    for index, symbol in enumerate(values):
        if not 0 <= symbol < ALPHABET_SIZE:
            raise ValueError(f"{field}[{index}] = {symbol} is outside [0, 25]")


class PaddingKind(str, Enum):
    first_key_char = "first-key-char"
    fixed_char = "fixed-char"
    none = "none"


class DispersionMode(str, Enum):
    counts_over_26 = "counts_over_26"
    percents_over_26 = "percents_over_26"
    counts_over_present = "counts_over_present"


class ChartFormat(str, Enum):
    csv = "csv"
    json = "json"
    ascii = "ascii"
    svg = "svg"


class ComponentKind(str, Enum):
    anchored = "anchored"
    odd_cycle = "odd_cycle"
    even_cycle = "even_cycle"


class RankingMode(str, Enum):
    words = "words"
    chi2 = "chi2"


class Scheme(str, Enum):
    caesar = "caesar"
    vigenere = "vigenere"
    columnar = "columnar"
    hybrid = "hybrid"


class NormalizedText(BaseModel):
    """Letters-only view of a message plus the characters stripped from it."""

    model_config = ConfigDict(frozen=True)

    letters: Tuple[int, ...]
    original_length: int = Field(ge=0)
    removed: Tuple[Tuple[int, str], ...] = ()

    @field_validator("letters")
    def _check_letters(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        _check_symbols(value, "letters")
        return value

    @model_validator(mode="after")
    def _check_layout(self) -> "NormalizedText":
        if len(self.letters) + len(self.removed) != self.original_length:
            raise ValueError("letters and removed characters must add up to original_length")
        indices = [index for index, _ in self.removed]
        if indices != sorted(set(indices)):
            raise ValueError("removed indices must be unique and ascending")
        if indices and not 0 <= indices[-1] < self.original_length:
            raise ValueError("removed index outside the original text")
        return self

    @property
    def text(self) -> str:
        return letters_to_text(self.letters)

    def reinsert(self, letters: Optional[Sequence[int]] = None) -> str:
        source = self.letters if letters is None else tuple(letters)
        if len(source) != len(self.letters):
            raise AlignmentError(
                f"expected {len(self.letters)} letters to re-insert into, got {len(source)}"
            )
        removed = dict(self.removed)
        stream = iter(source)
        return "".join(
            removed[index] if index in removed else ALPHABET[next(stream)]
            for index in range(self.original_length)
        )


class PaddingPolicy(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: PaddingKind = PaddingKind.first_key_char
    symbol: Optional[int] = None

    @model_validator(mode="after")
    def _check_symbol(self) -> "PaddingPolicy":
        if self.kind == PaddingKind.fixed_char:
            if self.symbol is None or not 0 <= self.symbol < ALPHABET_SIZE:
                raise ValueError("fixed padding needs a symbol in [0, 25]")
        elif self.symbol is not None:
            raise ValueError("only fixed padding carries a symbol")
        return self

    @classmethod
    def first_key_char(cls) -> "PaddingPolicy":
        return cls(kind=PaddingKind.first_key_char)

    @classmethod
    def fixed(cls, letter: str) -> "PaddingPolicy":
        letter = letter.strip().upper()
        if len(letter) != 1 or letter not in ALPHABET:
            raise HybridCipherError(f"padding letter must be a single A-Z letter, got {letter!r}")
        return cls(kind=PaddingKind.fixed_char, symbol=ALPHABET.index(letter))

    @classmethod
    def unpadded(cls) -> "PaddingPolicy":
        return cls(kind=PaddingKind.none)

    @classmethod
    def parse(cls, value: str) -> "PaddingPolicy":
        """Accepts `first-key-char`, `none`, a single letter, or `fixed:<letter>`."""
        normalized = value.strip().lower()
        if normalized == PaddingKind.first_key_char.value:
            return cls.first_key_char()
        if normalized == PaddingKind.none.value:
            return cls.unpadded()
        if normalized.startswith("fixed:"):
            return cls.fixed(normalized.split(":", 1)[1])
        if len(normalized) == 1:
            return cls.fixed(normalized)
        raise HybridCipherError(f"unknown padding policy {value!r}")

    def pad_symbol(self, key_first: int) -> Optional[int]:
        if self.kind == PaddingKind.first_key_char:
            return key_first
        if self.kind == PaddingKind.fixed_char:
            return self.symbol
        return None

    @property
    def label(self) -> str:
        if self.kind == PaddingKind.fixed_char:
            return f"fixed:{ALPHABET[self.symbol]}"
        return self.kind.value


class ColumnOrder(BaseModel):
    model_config = ConfigDict(frozen=True)

    keyword: Tuple[int, ...] = Field(min_length=1)
    read_order: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_order(self) -> "ColumnOrder":
        _check_symbols(self.keyword, "keyword")
        width = len(self.keyword)
        if sorted(self.read_order) != list(range(width)):
            raise ValueError("read_order must be a permutation of the keyword columns")
        for left, right in zip(self.read_order, self.read_order[1:]):
            pair_left = (self.keyword[left], left)
            pair_right = (self.keyword[right], right)
            if pair_left > pair_right:
                raise ValueError("read_order must follow the stable alphabetical order")
        return self

    @property
    def width(self) -> int:
        return len(self.keyword)

    @property
    def keyword_text(self) -> str:
        return letters_to_text(self.keyword)


class ColumnGrid(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: int = Field(ge=0)
    cols: int = Field(ge=1)
    cells: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "ColumnGrid":
        if len(self.cells) != self.rows:
            raise ValueError("cells must hold exactly `rows` rows")
        for row in self.cells:
            if len(row) != self.cols:
                raise ValueError("every row must hold exactly `cols` cells")
            _check_symbols(row, "cells")
        return self

    @classmethod
    def from_padded(cls, padded: Sequence[int], cols: int) -> "ColumnGrid":
        if cols < 1 or len(padded) % cols:
            raise AlignmentError(
                f"length {len(padded)} is not a multiple of {cols} columns"
            )
        rows = len(padded) // cols
        cells = tuple(tuple(padded[row * cols:(row + 1) * cols]) for row in range(rows))
        return cls(rows=rows, cols=cols, cells=cells)

    def column(self, index: int) -> Tuple[int, ...]:
        return tuple(row[index] for row in self.cells)

    def render(self, order: Optional[ColumnOrder] = None) -> str:
        """Keyword header over the grid; with an order, the re-arranged grid follows."""
        lines: List[str] = []
        if order is not None:
            lines.append(" ".join(order.keyword_text))
        lines.extend(" ".join(letters_to_text(row)) for row in self.cells)
        if order is not None:
            lines.append("")
            lines.append(" ".join(ALPHABET[order.keyword[index]] for index in order.read_order))
            lines.extend(
                " ".join(ALPHABET[row[index]] for index in order.read_order)
                for row in self.cells
            )
        return "\n".join(lines)


class PositionPermutation(BaseModel):
    """sigma[j] is the padded-plaintext index read out at position j."""

    model_config = ConfigDict(frozen=True)

    sigma: Tuple[int, ...]

    @field_validator("sigma")
    def _check_bijection(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(value) != list(range(len(value))):
            raise ValueError("sigma must be a bijection on its index range")
        return value

    def __len__(self) -> int:
        return len(self.sigma)

    def apply(self, values: Sequence[int]) -> List[int]:
        if len(values) != len(self.sigma):
            raise AlignmentError(
                f"permutation of length {len(self.sigma)} applied to {len(values)} values"
            )
        return [values[index] for index in self.sigma]

    def inverse(self) -> "PositionPermutation":
        inverse = [0] * len(self.sigma)
        for position, index in enumerate(self.sigma):
            inverse[index] = position
        return PositionPermutation(sigma=tuple(inverse))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Cycles in sigma order, each starting at its smallest index."""
        seen = [False] * len(self.sigma)
        cycles: List[Tuple[int, ...]] = []
        for start in range(len(self.sigma)):
            if seen[start]:
                continue
            cycle = []
            position = start
            while not seen[position]:
                seen[position] = True
                cycle.append(position)
                position = self.sigma[position]
            cycles.append(tuple(cycle))
        return cycles


class ShiftKey(BaseModel):
    model_config = ConfigDict(frozen=True)

    shifts: Tuple[int, ...] = Field(min_length=1)

    @field_validator("shifts")
    def _check_shifts(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        _check_symbols(value, "shifts")
        return value

    @property
    def text(self) -> str:
        return letters_to_text(self.shifts)

    def __len__(self) -> int:
        return len(self.shifts)


class HybridCiphertext(BaseModel):
    """What travels: the ciphertext and its length; L is recomputed from n and k."""

    model_config = ConfigDict(frozen=True)

    cipher: Tuple[int, ...]
    keyword: str = Field(min_length=1)
    padded_length: int = Field(ge=0)

    @field_validator("keyword")
    def _check_keyword(cls, value: str) -> str:
        value = value.strip().upper()
        if not value or not all("A" <= char <= "Z" for char in value):
            raise ValueError("keyword must be A-Z letters")
        return value

    @model_validator(mode="after")
    def _check_lengths(self) -> "HybridCiphertext":
        _check_symbols(self.cipher, "cipher")
        width = len(self.keyword)
        if self.padded_length % width:
            raise ValueError("padded_length must be a multiple of the keyword length")
        slack = self.padded_length - len(self.cipher)
        if not 0 <= slack < width:
            raise ValueError("padded_length must be the least multiple of k covering the cipher")
        return self

    @classmethod
    def from_cipher(cls, cipher: Sequence[int], keyword: str) -> "HybridCiphertext":
        keyword = keyword.strip().upper()
        if not keyword or not all("A" <= char <= "Z" for char in keyword):
            raise InvalidKeyError(f"keyword must be non-empty A-Z letters, got {keyword!r}")
        width = len(keyword)
        padded_length = -(-len(cipher) // width) * width
        return cls(cipher=tuple(cipher), keyword=keyword, padded_length=padded_length)

    @property
    def length(self) -> int:
        return len(self.cipher)


class HybridEncryption(BaseModel):
    model_config = ConfigDict(frozen=True)

    cipher: Tuple[int, ...]
    intermediate: Tuple[int, ...]

    @property
    def cipher_text(self) -> str:
        return letters_to_text(self.cipher)

    @property
    def intermediate_text(self) -> str:
        return letters_to_text(self.intermediate)


class ComponentSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ComponentKind
    positions: Tuple[int, ...]
    solutions: int = Field(ge=0)


class Candidate(BaseModel):
    model_config = ConfigDict(frozen=True)

    plaintext: str
    score: float
    coverage: int = Field(ge=0)


class CandidateSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    candidates: Tuple[Candidate, ...]
    components: Tuple[ComponentSummary, ...]
    total: int = Field(ge=0)
    truncated: bool = False
    ranking: RankingMode = RankingMode.words

    @property
    def plaintexts(self) -> List[str]:
        return [candidate.plaintext for candidate in self.candidates]

    @property
    def best(self) -> Candidate:
        return self.candidates[0]


class FrequencyProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...] = Field(min_length=ALPHABET_SIZE, max_length=ALPHABET_SIZE)
    total: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_total(self) -> "FrequencyProfile":
        if any(count < 0 for count in self.counts):
            raise ValueError("letter counts must be non-negative")
        if sum(self.counts) != self.total:
            raise ValueError("letter counts must sum to total")
        return self

    def count_of(self, letter: str) -> int:
        return self.counts[ALPHABET.index(letter.upper())]

    def percentages(self) -> List[float]:
        if self.total == 0:
            return [0.0] * ALPHABET_SIZE
        return [100.0 * count / self.total for count in self.counts]


class ReferenceDistribution(BaseModel):
    model_config = ConfigDict(frozen=True)

    probs: Tuple[float, ...] = Field(min_length=ALPHABET_SIZE, max_length=ALPHABET_SIZE)

    @field_validator("probs")
    def _check_probs(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(prob < 0 for prob in value):
            raise ValueError("reference probabilities must be non-negative")
        if abs(math.fsum(value) - 1.0) > 1e-9:
            raise ValueError("reference probabilities must sum to 1")
        return value

    @classmethod
    def uniform(cls) -> "ReferenceDistribution":
        return cls(probs=(1.0 / ALPHABET_SIZE,) * ALPHABET_SIZE)


class Dispersion(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: DispersionMode
    variance: float = Field(ge=0)
    std_dev: float = Field(ge=0)

    @model_validator(mode="after")
    def _check_std(self) -> "Dispersion":
        if not math.isclose(self.std_dev ** 2, self.variance, rel_tol=1e-9, abs_tol=1e-9):
            raise ValueError("std_dev must be the square root of variance")
        return self


class KasiskiFinding(BaseModel):
    model_config = ConfigDict(frozen=True)

    substring: str
    positions: Tuple[int, ...]
    distances: Tuple[int, ...]


class KasiskiResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    findings: Tuple[KasiskiFinding, ...] = ()
    factor_histogram: Dict[int, int] = Field(default_factory=dict)

    def top_factors(self, limit: int = 3) -> List[int]:
        ranked = sorted(self.factor_histogram.items(), key=lambda item: (-item[1], item[0]))
        return [factor for factor, _ in ranked[:limit]]


class ShiftCoincidence(BaseModel):
    """Agreement between a text and the same text shifted left by `shift` letters."""

    model_config = ConfigDict(frozen=True)

    shift: int = Field(ge=1)
    matches: int = Field(ge=0)
    compared: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_matches(self) -> "ShiftCoincidence":
        if self.matches > self.compared:
            raise ValueError("matches cannot exceed the compared positions")
        return self

    @computed_field
    @property
    def kappa(self) -> float:
        return self.matches / self.compared


class FriedmanConstants(BaseModel):
    model_config = ConfigDict(frozen=True)

    kappa_plaintext: float = Field(default=0.0665, gt=0)
    kappa_random: float = Field(default=0.0385, gt=0)
    numerator: float = Field(default=0.0265, gt=0)


class FriedmanEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    stable: bool


class AnalysisReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    profile: FrequencyProfile
    ic: float
    chi2_english: float
    chi2_uniform: float
    entropy_bits: float
    variance: float
    std_dev: float
    dispersion: Tuple[Dispersion, ...] = ()
    kasiski: KasiskiResult = Field(default_factory=KasiskiResult)
    friedman: FriedmanEstimate
    coincidences: Tuple[ShiftCoincidence, ...] = ()
    english_baseline: Optional[Dispersion] = None

    @model_validator(mode="after")
    def _check_std(self) -> "AnalysisReport":
        if not math.isclose(self.std_dev ** 2, self.variance, rel_tol=1e-9, abs_tol=1e-9):
            raise ValueError("std_dev must be the square root of variance")
        return self

    @property
    def friedman_keylen(self) -> float:
        return self.friedman.value
