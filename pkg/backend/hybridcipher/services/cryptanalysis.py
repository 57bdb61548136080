from __future__ import annotations

import logging
import math
from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..errors import HybridCipherError, ReferenceDataError, UndefinedStatisticError
from ..models import (
    ALPHABET,
    ALPHABET_SIZE,
    AnalysisReport,
    Dispersion,
    DispersionMode,
    FrequencyProfile,
    FriedmanConstants,
    FriedmanEstimate,
    KasiskiFinding,
    KasiskiResult,
    NormalizedText,
    ReferenceDistribution,
    ShiftCoincidence,
    letters_to_text,
)
from ..schemas import FigureComparison, ReportedFigures
from ..settings import settings
from .reference_data import load_friedman_constants, load_lexicon, load_reference_table
from .text_codec import letters_of

logger = logging.getLogger("hybridcipher")

TextLike = Union[str, NormalizedText, Sequence[int]]

KASISKI_FACTORS = range(2, 21)


def _letters(text: TextLike) -> List[int]:
    # Statistics only ever see letters; anything else is dropped.
    if isinstance(text, str):
        return [ord(char) - ord("A") for char in text.upper() if "A" <= char <= "Z"]
    return letters_of(text)


def frequency_profile(text: TextLike) -> FrequencyProfile:
    letters = np.asarray(_letters(text), dtype=np.int64)
    counts = np.bincount(letters, minlength=ALPHABET_SIZE)
    return FrequencyProfile(counts=tuple(int(count) for count in counts), total=int(letters.size))


def index_of_coincidence(profile: FrequencyProfile) -> float:
    total = profile.total
    if total < 2:
        raise UndefinedStatisticError(f"index of coincidence needs at least 2 letters, got {total}")
    counts = np.asarray(profile.counts, dtype=np.int64)
    return float((counts * (counts - 1)).sum() / (total * (total - 1)))


def chi_squared(profile: FrequencyProfile, reference: ReferenceDistribution) -> float:
    if profile.total < 1:
        raise UndefinedStatisticError("chi-squared needs at least 1 letter")
    probs = np.asarray(reference.probs, dtype=float)
    zero = np.flatnonzero(probs <= 0)
    if zero.size:
        raise ReferenceDataError(
            f"reference probability for {ALPHABET[int(zero[0])]} is zero"
        )
    expected = profile.total * probs
    observed = np.asarray(profile.counts, dtype=float)
    return float(((observed - expected) ** 2 / expected).sum())


def entropy(profile: FrequencyProfile, base: float = 2.0) -> float:
    if profile.total < 1:
        raise UndefinedStatisticError("entropy needs at least 1 letter")
    if base <= 0 or base == 1:
        raise UndefinedStatisticError(f"entropy base must be positive and not 1, got {base}")
    counts = np.asarray(profile.counts, dtype=float)
    probs = counts[counts > 0] / profile.total
    return max(0.0, float(-(probs * np.log(probs)).sum() / math.log(base)))


def dispersion(
    profile: FrequencyProfile, mode: DispersionMode = DispersionMode.counts_over_26
) -> Dispersion:
    if profile.total < 1:
        raise UndefinedStatisticError("dispersion needs at least 1 letter")
    counts = np.asarray(profile.counts, dtype=float)
    if mode == DispersionMode.counts_over_26:
        values = counts
    elif mode == DispersionMode.percents_over_26:
        values = 100.0 * counts / profile.total
    else:
        values = counts[counts > 0]
    variance = float(np.var(values))
    return Dispersion(mode=mode, variance=variance, std_dev=math.sqrt(variance))


def dispersion_table(profile: FrequencyProfile) -> Tuple[Dispersion, ...]:
    return tuple(dispersion(profile, mode) for mode in DispersionMode)


def _check_ngram_bounds(min_ngram: int, max_ngram: Optional[int]) -> None:
    if min_ngram < 2:
        raise HybridCipherError(f"min_ngram must be at least 2, got {min_ngram}")
    if max_ngram is not None and max_ngram < min_ngram:
        raise HybridCipherError(f"max_ngram {max_ngram} is below min_ngram {min_ngram}")


def _repeated_windows(
    letters: np.ndarray, min_ngram: int, max_ngram: Optional[int]
) -> Iterator[Tuple[int, np.ndarray]]:
    """Yields (length, window ids) for every length that still has a repeat."""
    longest = letters.size - 1 if max_ngram is None else min(max_ngram, letters.size - 1)
    for length in range(min_ngram, longest + 1):
        windows = sliding_window_view(letters, length)
        _, ids = np.unique(windows, axis=0, return_inverse=True)
        ids = ids.reshape(-1)
        # No repeat of this length means no longer repeat either.
        if np.bincount(ids).max() < 2:
            return
        yield length, ids


def _factor_counts(ids: np.ndarray) -> Counter:
    # Two occurrences are a multiple of f apart iff they share a residue mod f.
    residues = np.arange(ids.size)
    counts: Counter = Counter()
    for factor in KASISKI_FACTORS:
        sizes = np.bincount(ids * factor + residues % factor)
        pairs = int((sizes * (sizes - 1) // 2).sum())
        if pairs:
            counts[factor] = pairs
    return counts


def kasiski(text: TextLike, min_ngram: int = 3, max_ngram: Optional[int] = None) -> KasiskiResult:
    """Every repeated substring of length min_ngram..max_ngram, with pairwise distances.

    The factor histogram counts, over all reported distances, each divisor
    in 2..20 of the distance.
    """
    _check_ngram_bounds(min_ngram, max_ngram)
    letters = np.asarray(_letters(text), dtype=np.int64)
    text_letters = letters_to_text(letters.tolist())
    findings: List[KasiskiFinding] = []
    histogram: Counter = Counter()
    for length, ids in _repeated_windows(letters, min_ngram, max_ngram):
        histogram.update(_factor_counts(ids))
        order = np.argsort(ids, kind="stable")
        groups = np.split(order, np.flatnonzero(np.diff(ids[order])) + 1)
        repeated = sorted(
            (group.tolist() for group in groups if group.size > 1), key=lambda starts: starts[0]
        )
        for starts in repeated:
            distances = tuple(later - earlier for earlier, later in combinations(starts, 2))
            findings.append(
                KasiskiFinding.model_construct(
                    substring=text_letters[starts[0]:starts[0] + length],
                    positions=tuple(starts),
                    distances=distances,
                )
            )
    return KasiskiResult(findings=tuple(findings), factor_histogram=dict(sorted(histogram.items())))


def kasiski_factors(
    text: TextLike, min_ngram: int = 3, max_ngram: Optional[int] = None
) -> KasiskiResult:
    """The factor histogram of kasiski() without materializing the findings."""
    _check_ngram_bounds(min_ngram, max_ngram)
    letters = np.asarray(_letters(text), dtype=np.int64)
    histogram: Counter = Counter()
    for _, ids in _repeated_windows(letters, min_ngram, max_ngram):
        histogram.update(_factor_counts(ids))
    return KasiskiResult(factor_histogram=dict(sorted(histogram.items())))


def shift_coincidence(text: TextLike, shift: int) -> ShiftCoincidence:
    letters = np.asarray(_letters(text), dtype=np.int64)
    if not 1 <= shift < letters.size:
        raise UndefinedStatisticError(
            f"shift must be in [1, {letters.size - 1}] for {letters.size} letters, got {shift}"
        )
    matches = int((letters[:-shift] == letters[shift:]).sum())
    return ShiftCoincidence(shift=shift, matches=matches, compared=int(letters.size - shift))


def coincidence_table(text: TextLike, max_shift: int = 20) -> Tuple[ShiftCoincidence, ...]:
    letters = _letters(text)
    return tuple(
        shift_coincidence(letters, shift) for shift in range(1, min(max_shift, len(letters) - 1) + 1)
    )


def friedman_keylength(
    profile: FrequencyProfile, constants: Optional[FriedmanConstants] = None
) -> FriedmanEstimate:
    constants = constants or FriedmanConstants()
    ic = index_of_coincidence(profile)
    total = profile.total
    numerator = constants.numerator * total
    denominator = (constants.kappa_plaintext - ic) + total * (ic - constants.kappa_random)
    if denominator <= 1e-12:
        value = numerator / denominator if denominator else math.inf
        logger.info("Friedman estimate unstable (denominator %.3g, raw %.3g)", denominator, value)
        return FriedmanEstimate(value=value, stable=False)
    return FriedmanEstimate(value=numerator / denominator, stable=True)


def english_score(text: TextLike, reference: Optional[ReferenceDistribution] = None) -> float:
    profile = frequency_profile(text)
    if profile.total == 0:
        raise UndefinedStatisticError("english_score needs a non-empty text")
    return chi_squared(profile, reference or load_reference_table())


@lru_cache(maxsize=8)
def _longest_word(words: FrozenSet[str]) -> int:
    return max((len(word) for word in words), default=0)


def word_coverage(text: TextLike, lexicon: Optional[FrozenSet[str]] = None) -> int:
    """Most letters coverable by non-overlapping lexicon words."""
    words = lexicon if lexicon is not None else load_lexicon()
    letters = letters_to_text(_letters(text))
    longest = _longest_word(words)
    best = [0] * (len(letters) + 1)
    for end in range(1, len(letters) + 1):
        best[end] = best[end - 1]
        for start in range(max(0, end - longest), end):
            gain = best[start] + end - start
            if gain > best[end] and letters[start:end] in words:
                best[end] = gain
    return best[-1]


def reference_dispersion(reference: ReferenceDistribution) -> Dispersion:
    """Spread of a reference table's letter percentages, the baseline a text is judged against."""
    variance = float(np.var(100.0 * np.asarray(reference.probs, dtype=float)))
    return Dispersion(
        mode=DispersionMode.percents_over_26, variance=variance, std_dev=math.sqrt(variance)
    )


def analyze(
    text: TextLike,
    english: Optional[ReferenceDistribution] = None,
    constants: Optional[FriedmanConstants] = None,
    min_ngram: int = 3,
    max_ngram: Optional[int] = None,
    max_shift: Optional[int] = None,
) -> AnalysisReport:
    english = english or load_reference_table()
    constants = constants or load_friedman_constants()
    profile = frequency_profile(text)
    spread = dispersion_table(profile)
    return AnalysisReport(
        profile=profile,
        ic=index_of_coincidence(profile),
        chi2_english=chi_squared(profile, english),
        chi2_uniform=chi_squared(profile, ReferenceDistribution.uniform()),
        entropy_bits=entropy(profile),
        variance=spread[0].variance,
        std_dev=spread[0].std_dev,
        dispersion=spread,
        kasiski=kasiski_factors(text, min_ngram, max_ngram or max(min_ngram, settings.max_ngram)),
        friedman=friedman_keylength(profile, constants),
        coincidences=coincidence_table(text, max_shift or settings.max_shift),
        english_baseline=reference_dispersion(english),
    )


def compare_reported(
    report: AnalysisReport, figures: ReportedFigures, tolerance: float = 5e-5
) -> List[FigureComparison]:
    """Checks each reported figure against the computed one at the given tolerance."""
    comparisons: List[FigureComparison] = []

    def check(name: str, computed: float, reported: Optional[float], note: Optional[str] = None) -> None:
        if reported is None:
            return
        comparisons.append(
            FigureComparison(
                name=name,
                computed=computed,
                reported=reported,
                reproduced=abs(computed - reported) <= tolerance,
                note=note,
            )
        )

    check("ic", report.ic, figures.ic)
    check("keyword_length", report.friedman.value, figures.keyword_length, "Friedman estimate")
    check("chi2_english", report.chi2_english, figures.chi2_english, "depends on the English table")
    check("chi2_uniform", report.chi2_uniform, figures.chi2_uniform)
    check("entropy_bits", report.entropy_bits, figures.entropy_bits, "base 2")

    for name, reported in (("variance", figures.variance), ("std_dev", figures.std_dev)):
        if reported is None:
            continue
        values = {item.mode.value: getattr(item, name) for item in report.dispersion}
        closest_mode = min(values, key=lambda mode: abs(values[mode] - reported))
        check(name, values[closest_mode], reported, f"closest mode: {closest_mode}")

    if report.english_baseline is not None:
        note = "English table, percent mode"
        check("english_variance", report.english_baseline.variance, figures.english_variance, note)
        check("english_std_dev", report.english_baseline.std_dev, figures.english_std_dev, note)
    return comparisons
