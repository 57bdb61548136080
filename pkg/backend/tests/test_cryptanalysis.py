import itertools
import math
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from hybridcipher.errors import ReferenceDataError, UndefinedStatisticError
from hybridcipher.models import (
    ALPHABET,
    Dispersion,
    DispersionMode,
    FrequencyProfile,
    FriedmanConstants,
    ReferenceDistribution,
)
from hybridcipher.schemas import ReportedFigures
from hybridcipher.services.cryptanalysis import (
    analyze,
    chi_squared,
    coincidence_table,
    compare_reported,
    dispersion,
    dispersion_table,
    english_score,
    entropy,
    frequency_profile,
    friedman_keylength,
    index_of_coincidence,
    reference_dispersion,
    shift_coincidence,
    word_coverage,
)
from hybridcipher.services.reference_data import load_reference_table


def test_forest_cipher_profile(forest_cipher):
    profile = frequency_profile(forest_cipher)
    assert profile.total == 45
    assert profile.count_of("I") == 7
    assert profile.count_of("m") == 4
    assert profile.count_of("Z") == 4
    assert profile.count_of("B") == 0
    assert sum(count * count for count in profile.counts) == 145


def test_forest_cipher_index_of_coincidence(forest_cipher):
    assert index_of_coincidence(frequency_profile(forest_cipher)) == pytest.approx(100 / 1980, abs=1e-6)


def test_forest_cipher_chi_squared(forest_cipher):
    profile = frequency_profile(forest_cipher)
    assert chi_squared(profile, ReferenceDistribution.uniform()) == pytest.approx(38.7778, abs=1e-3)
    assert chi_squared(profile, load_reference_table()) == pytest.approx(654.306, abs=0.05)


def test_forest_cipher_entropy(forest_cipher):
    profile = frequency_profile(forest_cipher)
    assert entropy(profile) == pytest.approx(4.0270, abs=1e-3)
    assert entropy(profile, base=math.e) == pytest.approx(4.0270 * math.log(2), abs=1e-3)


def test_forest_cipher_dispersion(forest_cipher):
    profile = frequency_profile(forest_cipher)
    table = {item.mode: item for item in dispersion_table(profile)}
    assert table[DispersionMode.counts_over_26].variance == pytest.approx(2.581361, abs=1e-5)
    assert table[DispersionMode.percents_over_26].variance == pytest.approx(12.7475, abs=1e-3)
    assert table[DispersionMode.counts_over_present].variance == pytest.approx(2.022161, abs=1e-5)
    for item in table.values():
        assert item.std_dev == pytest.approx(math.sqrt(item.variance))


def test_forest_cipher_friedman(forest_cipher):
    estimate = friedman_keylength(frequency_profile(forest_cipher))
    assert estimate.stable
    assert estimate.value == pytest.approx(2.144, abs=1e-3)


def test_friedman_unstable_for_tiny_texts():
    estimate = friedman_keylength(frequency_profile("AB"))
    assert not estimate.stable


def test_statistics_need_enough_letters():
    with pytest.raises(UndefinedStatisticError):
        index_of_coincidence(frequency_profile("A"))
    with pytest.raises(UndefinedStatisticError):
        entropy(frequency_profile(""))
    with pytest.raises(UndefinedStatisticError):
        chi_squared(frequency_profile("123"), ReferenceDistribution.uniform())
    with pytest.raises(UndefinedStatisticError):
        dispersion(frequency_profile(""))
    with pytest.raises(UndefinedStatisticError):
        entropy(frequency_profile("AB"), base=1)


def test_chi_squared_rejects_zero_reference_probability():
    reference = ReferenceDistribution(probs=(1.0,) + (0.0,) * 25)
    with pytest.raises(ReferenceDataError, match="for B"):
        chi_squared(frequency_profile("AB"), reference)


def test_single_letter_text_has_zero_entropy_and_full_coincidence():
    profile = frequency_profile("EEEE")
    assert entropy(profile) == 0.0
    assert index_of_coincidence(profile) == 1.0


def test_english_score_prefers_english(forest_letters):
    assert english_score(forest_letters) < english_score("QZXJQZXJKVQZXJQZXJKVWQQZJ")
    with pytest.raises(UndefinedStatisticError):
        english_score("")


def test_word_coverage(forest_letters):
    assert word_coverage(forest_letters) == 45
    assert word_coverage("INTHEFOREFT") == 8
    assert word_coverage("QQQ") == 0
    assert word_coverage("CATDOG", frozenset({"CAT"})) == 3


@settings(max_examples=300, deadline=None)
@given(
    text=st.lists(st.integers(min_value=0, max_value=25), min_size=2, max_size=80),
    mapping=st.permutations(range(26)),
)
def test_coincidence_and_entropy_survive_letter_substitution(text, mapping):
    original = frequency_profile(text)
    substituted = frequency_profile([mapping[letter] for letter in text])
    assert index_of_coincidence(substituted) == index_of_coincidence(original)
    assert entropy(substituted) == pytest.approx(entropy(original))
    assert dispersion(substituted).variance == pytest.approx(dispersion(original).variance)


def test_analyze_report(forest_cipher):
    report = analyze(forest_cipher)
    assert report.profile.total == 45
    assert report.variance == pytest.approx(2.581361, abs=1e-5)
    assert report.std_dev == pytest.approx(math.sqrt(2.581361), abs=1e-5)
    assert len(report.dispersion) == 3
    assert report.friedman_keylen == pytest.approx(2.144, abs=1e-3)


def test_compare_reported_flags_unreproduced_figures(forest_cipher):
    figures = ReportedFigures(
        ic=0.0501, keyword_length=1, chi2_uniform=38.7778, variance=33.9517, entropy_bits=3.3305
    )
    results = {item.name: item for item in compare_reported(analyze(forest_cipher), figures)}
    assert set(results) == {"ic", "keyword_length", "chi2_uniform", "variance", "entropy_bits"}
    assert results["chi2_uniform"].reproduced
    assert not results["ic"].reproduced
    assert not results["keyword_length"].reproduced
    assert not results["entropy_bits"].reproduced
    assert not results["variance"].reproduced
    assert results["variance"].note == "closest mode: percents_over_26"


def test_custom_friedman_constants(forest_cipher):
    constants = FriedmanConstants(kappa_plaintext=0.0667, kappa_random=0.0385, numerator=0.0282)
    estimate = friedman_keylength(frequency_profile(forest_cipher), constants)
    assert estimate.value != pytest.approx(2.144, abs=1e-3)


def _brute_force_ic(text):
    pairs = list(itertools.combinations(range(len(text)), 2))
    return sum(text[left] == text[right] for left, right in pairs) / len(pairs)


def _brute_force_entropy(text):
    counts = Counter(text)
    return -sum(count / len(text) * math.log2(count / len(text)) for count in counts.values())


def _brute_force_variance(text):
    counts = [text.count(letter) for letter in "ABCDEFGHIJKLMNOPQRSTUVWXYZ"]
    mean = sum(counts) / 26
    return sum((count - mean) ** 2 for count in counts) / 26


@pytest.mark.parametrize("length", range(1, 9))
def test_statistics_match_brute_force_over_four_letters(length):
    for letters in itertools.product("ABCD", repeat=length):
        text = "".join(letters)
        profile = frequency_profile(text)
        assert profile.total == length
        assert entropy(profile) == pytest.approx(_brute_force_entropy(text), abs=1e-9)
        assert dispersion(profile).variance == pytest.approx(_brute_force_variance(text), abs=1e-9)
        if length >= 2:
            assert index_of_coincidence(profile) == pytest.approx(_brute_force_ic(text), abs=1e-12)
            assert 0.0 <= index_of_coincidence(profile) <= 1.0
        assert 0.0 <= entropy(profile) <= 2.0 + 1e-12


def _english_counts(total):
    return [int(prob * total) for prob in load_reference_table().probs]


@pytest.mark.parametrize("total", [16_000, 91_713, 100_000, 200_000])
def test_dispersion_accepts_large_english_shaped_profiles(total):
    counts = _english_counts(total)
    profile = FrequencyProfile(counts=tuple(counts), total=sum(counts))
    for item in dispersion_table(profile):
        assert item.std_dev == pytest.approx(math.sqrt(item.variance), rel=1e-12)
    assert dispersion(profile).variance > 1e5


def test_dispersion_accepts_a_heavily_skewed_profile():
    counts = [1_000 * 997 + 13] + [1_000] * 25
    profile = FrequencyProfile(counts=tuple(counts), total=sum(counts))
    spread = dispersion(profile)
    assert spread.variance > 1e10
    assert Dispersion(mode=spread.mode, variance=spread.variance, std_dev=spread.std_dev) == spread


def test_analyze_handles_a_long_english_shaped_text():
    weights = load_reference_table().probs
    text = "".join(random.Random(7).choices(ALPHABET, weights=weights, k=100_000))
    report = analyze(text)
    assert report.profile.total == 100_000
    assert report.std_dev == pytest.approx(math.sqrt(report.variance), rel=1e-12)
    assert report.ic == pytest.approx(sum(prob * prob for prob in weights), abs=0.002)


def test_chi_squared_is_zero_for_proportional_counts():
    counts = list(range(1, 27))
    total = sum(counts)
    reference = ReferenceDistribution(probs=tuple(count / total for count in counts))
    for scale in (1, 3, 40):
        profile = FrequencyProfile(counts=tuple(count * scale for count in counts), total=total * scale)
        assert chi_squared(profile, reference) == pytest.approx(0.0, abs=1e-9)

    moved = counts.copy()
    moved[0] += 1
    moved[-1] -= 1
    assert chi_squared(FrequencyProfile(counts=tuple(moved), total=total), reference) > 1e-9


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=50), min_size=26, max_size=26).filter(lambda c: sum(c) > 0))
def test_chi_squared_vanishes_only_against_its_own_shape(counts):
    profile = FrequencyProfile(counts=tuple(counts), total=sum(counts))
    uniform = chi_squared(profile, ReferenceDistribution.uniform())
    if len(set(counts)) == 1:
        assert uniform == pytest.approx(0.0, abs=1e-9)
    else:
        assert uniform > 1e-9


def test_shift_coincidence_on_forest_cipher(forest_cipher):
    assert shift_coincidence(forest_cipher, 1).model_dump() == {
        "shift": 1,
        "matches": 2,
        "compared": 44,
        "kappa": pytest.approx(2 / 44),
    }
    assert (shift_coincidence(forest_cipher, 3).matches, shift_coincidence(forest_cipher, 3).compared) == (4, 42)
    assert shift_coincidence(forest_cipher, 17).kappa == 0.0


def test_shift_coincidence_bounds():
    with pytest.raises(UndefinedStatisticError):
        shift_coincidence("ABCD", 0)
    with pytest.raises(UndefinedStatisticError):
        shift_coincidence("ABCD", 4)
    assert shift_coincidence("AAAA", 3).kappa == 1.0


def test_coincidence_table_truncates_to_text(forest_cipher):
    table = coincidence_table(forest_cipher)
    assert [item.shift for item in table] == list(range(1, 21))
    assert [item.matches for item in table[:6]] == [2, 1, 4, 1, 1, 4]
    assert [item.shift for item in coincidence_table("ABCDE", max_shift=20)] == [1, 2, 3, 4]
    assert coincidence_table("A") == ()


def test_reference_dispersion():
    english = reference_dispersion(load_reference_table())
    assert english.mode == DispersionMode.percents_over_26
    assert english.variance == pytest.approx(10.399116, abs=1e-4)
    assert english.std_dev == pytest.approx(3.224766, abs=1e-4)
    assert reference_dispersion(ReferenceDistribution.uniform()).variance == pytest.approx(0.0, abs=1e-12)


def test_analyze_reports_english_baseline_and_coincidences(forest_cipher):
    report = analyze(forest_cipher)
    assert report.english_baseline == reference_dispersion(load_reference_table())
    assert len(report.coincidences) == 20
    assert report.coincidences[16].matches == 0
    cipher_percent = {item.mode: item for item in report.dispersion}[DispersionMode.percents_over_26]
    assert cipher_percent.variance > report.english_baseline.variance


def test_compare_reported_checks_english_baseline(forest_cipher):
    figures = ReportedFigures(english_variance=14.50603, english_std_dev=3.80868)
    results = {item.name: item for item in compare_reported(analyze(forest_cipher), figures)}
    assert set(results) == {"english_variance", "english_std_dev"}
    assert results["english_variance"].computed == pytest.approx(10.399116, abs=1e-4)
    assert not results["english_variance"].reproduced
    assert not results["english_std_dev"].reproduced
    assert results["english_std_dev"].note == "English table, percent mode"
