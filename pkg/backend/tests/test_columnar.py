import itertools
import string

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from hybridcipher.errors import AlignmentError, InvalidKeyError
from hybridcipher.models import ColumnGrid, ColumnOrder, PaddingPolicy, PositionPermutation, letters_to_text
from hybridcipher.services.columnar import (
    column_order,
    decrypt_columnar,
    encrypt_columnar,
    grid_of,
    permutation_of,
)
from hybridcipher.services.text_codec import normalize, pad_to_block

GERMAN_PLAINTEXT = "defendtheeastwallofthecastle"
GERMAN_CIPHER = "NALCXEHWTTDTTFSEELEEDSOAXFEAHL"


@pytest.mark.parametrize(
    "keyword,expected",
    [
        ("GERMAN", (4, 1, 0, 3, 5, 2)),
        ("TRUE", (3, 1, 0, 2)),
        ("ABBA", (0, 3, 1, 2)),
        ("a", (0,)),
        ("zzz", (0, 1, 2)),
    ],
)
def test_column_order(keyword, expected):
    assert column_order(keyword).read_order == expected


def test_column_order_rejects_bad_keywords():
    with pytest.raises(InvalidKeyError):
        column_order("")
    with pytest.raises(InvalidKeyError):
        column_order("TWO WORDS")


def test_column_order_must_be_stable():
    with pytest.raises(ValidationError):
        ColumnOrder(keyword=(0, 0), read_order=(1, 0))
    with pytest.raises(ValidationError):
        ColumnOrder(keyword=(1, 0), read_order=(0, 1))


def test_forest_cipher1(forest_letters, forest_cipher1):
    cipher = encrypt_columnar(normalize(forest_letters), "TRUE", PaddingPolicy.first_key_char())
    assert letters_to_text(cipher) == forest_cipher1


def test_german_example():
    cipher = encrypt_columnar(normalize(GERMAN_PLAINTEXT), "GERMAN", PaddingPolicy.fixed("X"))
    assert letters_to_text(cipher) == GERMAN_CIPHER
    assert len(cipher) == 30


def test_decrypt_forest_cipher1(forest_cipher1, forest_letters):
    padded = decrypt_columnar(normalize(forest_cipher1).letters, "TRUE")
    assert letters_to_text(padded) == forest_letters + "TTT"


def test_decrypt_german_example():
    padded = decrypt_columnar(normalize(GERMAN_CIPHER).letters, "GERMAN")
    assert letters_to_text(padded) == GERMAN_PLAINTEXT.upper() + "XX"


def test_decrypt_rejects_misaligned_length():
    with pytest.raises(AlignmentError):
        decrypt_columnar([0, 1, 2], "AB")


def test_unpadded_encrypt_needs_aligned_length():
    assert encrypt_columnar([0, 1, 2, 3], "BA", PaddingPolicy.unpadded()) == [1, 3, 0, 2]
    with pytest.raises(AlignmentError):
        encrypt_columnar([0, 1, 2], "BA", PaddingPolicy.unpadded())


def test_permutation_reads_the_cipher(forest_letters, forest_cipher1):
    padded = pad_to_block(normalize(forest_letters), 4, PaddingPolicy.first_key_char(), 19)
    sigma = permutation_of("TRUE", 48)
    assert letters_to_text(sigma.apply(padded)) == forest_cipher1
    assert sigma.sigma[:3] == (3, 7, 11)


def test_permutation_rejects_unaligned_length():
    with pytest.raises(AlignmentError):
        permutation_of("TRUE", 45)


def test_position_permutation_algebra():
    sigma = PositionPermutation(sigma=(1, 2, 0, 3))
    assert sigma.inverse().sigma == (2, 0, 1, 3)
    assert sigma.inverse().apply(sigma.apply([10, 11, 12, 13])) == [10, 11, 12, 13]
    assert sigma.cycles() == [(0, 1, 2), (3,)]
    assert sigma.apply([10, 11, 12, 13]) == [11, 12, 10, 13]
    with pytest.raises(AlignmentError):
        sigma.apply([1, 2])
    with pytest.raises(ValidationError):
        PositionPermutation(sigma=(0, 0))


def test_grid_render_shows_rearranged_columns():
    grid = ColumnGrid.from_padded([0, 1, 2, 3, 4, 5], 3)
    assert grid.render() == "A B C\nD E F"
    assert grid.render(column_order("CAB")) == "C A B\nA B C\nD E F\n\nA B C\nB C A\nE F D"
    assert grid.column(2) == (2, 5)


def test_grid_of_german_example():
    padded = pad_to_block(normalize(GERMAN_PLAINTEXT), 6, PaddingPolicy.fixed("X"), 6)
    grid = grid_of(padded, "GERMAN")
    assert grid.rows == 5
    assert letters_to_text(grid.cells[-1]) == "STLEXX"
    with pytest.raises(AlignmentError):
        ColumnGrid.from_padded([0, 1, 2], 2)


keywords = st.text(alphabet=string.ascii_uppercase, min_size=1, max_size=8)
messages = st.lists(st.integers(min_value=0, max_value=25), max_size=60)
policies = st.sampled_from([PaddingPolicy.first_key_char(), PaddingPolicy.fixed("X")])


@settings(max_examples=1000, deadline=None)
@given(message=messages, keyword=keywords, policy=policies)
def test_columnar_round_trip_is_padded_identity(message, keyword, policy):
    order = column_order(keyword)
    padded = pad_to_block(message, order.width, policy, order.keyword[0])
    cipher = encrypt_columnar(message, keyword, policy)
    assert sorted(cipher) == sorted(padded)
    assert decrypt_columnar(cipher, keyword) == padded


@settings(max_examples=200, deadline=None)
@given(keyword=keywords, rows=st.integers(min_value=1, max_value=6))
def test_permutation_inverse_undoes_transposition(keyword, rows):
    length = rows * len(keyword)
    sigma = permutation_of(keyword, length)
    values = list(range(length))
    assert sigma.inverse().apply(sigma.apply(values)) == values
    assert [index % 26 for index in sigma.apply(values)] == encrypt_columnar(
        [value % 26 for value in values], keyword, PaddingPolicy.unpadded()
    )


def _keyword_for(read_order):
    letters = [""] * len(read_order)
    for rank, column in enumerate(read_order):
        letters[column] = string.ascii_uppercase[rank]
    return "".join(letters)


@pytest.mark.parametrize("width", range(1, 9))
def test_permutation_matches_encryption_for_every_read_order(width):
    for read_order in itertools.permutations(range(width)):
        keyword = _keyword_for(read_order)
        assert column_order(keyword).read_order == read_order
        for rows in range(1, 9):
            length = rows * width
            sigma = permutation_of(keyword, length).sigma
            low = [index % 26 for index in range(length)]
            high = [index // 26 for index in range(length)]
            assert [index % 26 for index in sigma] == encrypt_columnar(low, keyword, PaddingPolicy.unpadded())
            assert [index // 26 for index in sigma] == encrypt_columnar(high, keyword, PaddingPolicy.unpadded())
