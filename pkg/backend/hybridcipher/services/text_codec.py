from __future__ import annotations

from typing import List, Sequence, Tuple, Union

from ..errors import AlignmentError, InputEncodingError, InvalidKeyError
from ..models import ALPHABET_SIZE, NormalizedText, PaddingPolicy

MessageLike = Union[NormalizedText, Sequence[int]]

_ALLOWED_CONTROLS = {"\t", "\n", "\r"}


def _is_printable(char: str) -> bool:
    return char in _ALLOWED_CONTROLS or (char.isascii() and char.isprintable())


def normalize(text: str, case_fold: bool = True) -> NormalizedText:
    letters: List[int] = []
    removed: List[Tuple[int, str]] = []
    for index, char in enumerate(text):
        if not _is_printable(char):
            raise InputEncodingError(
                f"unsupported character {char!r} at index {index}", index=index
            )
        if "A" <= char <= "Z":
            letters.append(ord(char) - ord("A"))
        elif "a" <= char <= "z":
            if not case_fold:
                raise InputEncodingError(
                    f"lowercase letter {char!r} at index {index} with case folding off",
                    index=index,
                )
            letters.append(ord(char) - ord("a"))
        else:
            removed.append((index, char))
    return NormalizedText(
        letters=tuple(letters), original_length=len(text), removed=tuple(removed)
    )


def letters_of(message: MessageLike) -> List[int]:
    if isinstance(message, NormalizedText):
        return list(message.letters)
    letters = list(message)
    for index, symbol in enumerate(letters):
        if not 0 <= symbol < ALPHABET_SIZE:
            raise InputEncodingError(f"symbol {symbol} at index {index} is outside [0, 25]", index=index)
    return letters


def keyword_letters(keyword: str) -> List[int]:
    cleaned = keyword.strip()
    if not cleaned:
        raise InvalidKeyError("keyword must not be empty")
    letters: List[int] = []
    for index, char in enumerate(cleaned.upper()):
        if not "A" <= char <= "Z":
            raise InvalidKeyError(f"keyword character {char!r} at index {index} is not A-Z")
        letters.append(ord(char) - ord("A"))
    return letters


def pad_length(length: int, block: int) -> int:
    if block < 1:
        raise AlignmentError(f"block must be at least 1, got {block}")
    return -length % block


def pad_to_block(
    message: MessageLike, block: int, policy: PaddingPolicy, key_first: int
) -> List[int]:
    letters = letters_of(message)
    shortfall = pad_length(len(letters), block)
    if shortfall == 0:
        return letters
    symbol = policy.pad_symbol(key_first)
    if symbol is None:
        raise AlignmentError(
            f"length {len(letters)} is not a multiple of {block} and padding is disabled"
        )
    return letters + [symbol] * shortfall


def unpad(padded: Sequence[int], pad_count: int) -> List[int]:
    if not 0 <= pad_count <= len(padded):
        raise AlignmentError(f"cannot strip {pad_count} pad symbols from {len(padded)} letters")
    return list(padded[: len(padded) - pad_count])
