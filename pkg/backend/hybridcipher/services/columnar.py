from __future__ import annotations

from typing import List, Sequence, Union

from ..errors import AlignmentError
from ..models import ColumnGrid, ColumnOrder, PaddingPolicy, PositionPermutation
from .text_codec import MessageLike, keyword_letters, pad_to_block

KeywordLike = Union[str, ColumnOrder]


def column_order(keyword: KeywordLike) -> ColumnOrder:
    if isinstance(keyword, ColumnOrder):
        return keyword
    letters = keyword_letters(keyword)
    read_order = sorted(range(len(letters)), key=lambda index: (letters[index], index))
    return ColumnOrder(keyword=tuple(letters), read_order=tuple(read_order))


def grid_of(padded: Sequence[int], keyword: KeywordLike) -> ColumnGrid:
    order = column_order(keyword)
    return ColumnGrid.from_padded(list(padded), order.width)


def encrypt_columnar(
    message: MessageLike, keyword: KeywordLike, policy: PaddingPolicy
) -> List[int]:
    order = column_order(keyword)
    padded = pad_to_block(message, order.width, policy, order.keyword[0])
    grid = ColumnGrid.from_padded(padded, order.width)
    return [symbol for index in order.read_order for symbol in grid.column(index)]


def decrypt_columnar(cipher: Sequence[int], keyword: KeywordLike) -> List[int]:
    order = column_order(keyword)
    width = order.width
    if len(cipher) % width:
        raise AlignmentError(
            f"ciphertext length {len(cipher)} is not a multiple of keyword length {width}"
        )
    return permutation_of(order, len(cipher)).inverse().apply(list(cipher))


def permutation_of(keyword: KeywordLike, padded_length: int) -> PositionPermutation:
    order = column_order(keyword)
    width = order.width
    if padded_length % width:
        raise AlignmentError(
            f"padded length {padded_length} is not a multiple of keyword length {width}"
        )
    rows = padded_length // width
    sigma = tuple(
        order.read_order[position // rows] + width * (position % rows)
        for position in range(padded_length)
    )
    return PositionPermutation(sigma=sigma)
