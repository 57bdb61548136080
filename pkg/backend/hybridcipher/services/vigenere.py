from __future__ import annotations

from typing import List, Sequence, Union

import numpy as np

from ..errors import InvalidKeyError
from ..models import ALPHABET, ALPHABET_SIZE, ShiftKey
from .text_codec import MessageLike, keyword_letters, letters_of

KeyLike = Union[ShiftKey, str, Sequence[int]]


def shift_key(key: KeyLike) -> ShiftKey:
    if isinstance(key, ShiftKey):
        return key
    if isinstance(key, str):
        return ShiftKey(shifts=tuple(keyword_letters(key)))
    shifts = tuple(key)
    if not shifts:
        raise InvalidKeyError("key must not be empty")
    for index, shift in enumerate(shifts):
        if not 0 <= shift < ALPHABET_SIZE:
            raise InvalidKeyError(f"key shift {shift} at index {index} is outside [0, 25]")
    return ShiftKey(shifts=shifts)


def _check_shift(n: int) -> None:
    if not 0 <= n < ALPHABET_SIZE:
        raise InvalidKeyError(f"shift must be in [0, 25], got {n}")


def _as_array(message: MessageLike) -> np.ndarray:
    return np.asarray(letters_of(message), dtype=np.int64)


def _keystream(key: ShiftKey, length: int) -> np.ndarray:
    # np.resize repeats the key cyclically and truncates it to `length`.
    return np.resize(np.asarray(key.shifts, dtype=np.int64), length)


def caesar_encrypt(message: MessageLike, n: int) -> List[int]:
    _check_shift(n)
    return ((_as_array(message) + n) % ALPHABET_SIZE).tolist()


def caesar_decrypt(message: MessageLike, n: int) -> List[int]:
    _check_shift(n)
    return ((_as_array(message) - n) % ALPHABET_SIZE).tolist()


def vigenere_encrypt(message: MessageLike, key: KeyLike) -> List[int]:
    letters = _as_array(message)
    stream = _keystream(shift_key(key), letters.size)
    return ((letters + stream) % ALPHABET_SIZE).tolist()


def vigenere_decrypt(cipher: MessageLike, key: KeyLike) -> List[int]:
    letters = _as_array(cipher)
    stream = _keystream(shift_key(key), letters.size)
    return ((letters - stream) % ALPHABET_SIZE).tolist()


def tabula_recta() -> List[List[int]]:
    symbols = np.arange(ALPHABET_SIZE)
    return (np.add.outer(symbols, symbols) % ALPHABET_SIZE).tolist()


def format_tabula_recta() -> str:
    lines = ["  " + " ".join(ALPHABET)]
    for row_index, row in enumerate(tabula_recta()):
        lines.append(ALPHABET[row_index] + " " + " ".join(ALPHABET[value] for value in row))
    return "\n".join(lines)
