"""Transposition-keyed Vigenère: the columnar ciphertext of a message keys a
Vigenère pass over the same message.

With sigma = permutation_of(keyword, L) every ciphertext letter satisfies

    c[i] = (p[i] + p[sigma[i]]) mod 26,   0 <= i < n

where positions n..L-1 hold the known pad symbol. Keyword-only decryption
solves that system cycle by cycle over sigma.
"""

from __future__ import annotations

import heapq
import itertools
import logging
import math
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import AlignmentError, HybridCipherError, InvalidKeyError, NoSolutionError
from ..models import (
    ALPHABET_SIZE,
    Candidate,
    CandidateSet,
    ComponentKind,
    ComponentSummary,
    HybridCiphertext,
    HybridEncryption,
    PaddingPolicy,
    PositionPermutation,
    RankingMode,
    ReferenceDistribution,
    letters_to_text,
)
from ..settings import settings
from .columnar import KeywordLike, column_order, encrypt_columnar, permutation_of
from .cryptanalysis import english_score, word_coverage
from .reference_data import load_lexicon, load_reference_table
from .text_codec import MessageLike, letters_of
from .vigenere import vigenere_decrypt, vigenere_encrypt

logger = logging.getLogger("hybridcipher")

Assignment = Dict[int, int]
RankedSolutions = List[Tuple[Assignment, float]]


def hybrid_encrypt(
    message: MessageLike, keyword: KeywordLike, policy: Optional[PaddingPolicy] = None
) -> HybridEncryption:
    policy = policy or PaddingPolicy.first_key_char()
    letters = letters_of(message)
    if not letters:
        raise HybridCipherError("message must contain at least one letter")
    intermediate = encrypt_columnar(letters, keyword, policy)
    cipher = vigenere_encrypt(letters, intermediate[: len(letters)])
    return HybridEncryption(cipher=tuple(cipher), intermediate=tuple(intermediate))


def hybrid_decrypt_known_intermediate(
    cipher: MessageLike, intermediate: MessageLike
) -> List[int]:
    letters = letters_of(cipher)
    key = letters_of(intermediate)
    if len(key) < len(letters):
        raise InvalidKeyError(
            f"intermediate key has {len(key)} letters, ciphertext has {len(letters)}"
        )
    if not letters:
        return []
    return vigenere_decrypt(letters, key[: len(letters)])


def solve_component(
    component: Sequence[int],
    cipher: Sequence[int],
    sigma: Union[PositionPermutation, Sequence[int]],
    known: Mapping[int, int],
) -> List[Assignment]:
    """All assignments of the component's unknown positions.

    A component is a cycle of sigma (or a chain ending in known positions).
    Anchored components have exactly one solution; an unanchored cycle of
    odd length has 0 or 2, of even length 0 or 26.
    """
    mapping = sigma.sigma if isinstance(sigma, PositionPermutation) else sigma
    unknown = [position for position in component if position not in known]
    if not unknown:
        return [{}]

    if len(unknown) < len(component):
        # Walk backwards from every known value: p[i] = c[i] - p[sigma[i]].
        predecessor = {mapping[position]: position for position in component}
        values = {position: known[position] for position in component if position in known}
        frontier = list(values)
        while frontier:
            previous = predecessor.get(frontier.pop())
            if previous is None or previous in values:
                continue
            values[previous] = (cipher[previous] - values[mapping[previous]]) % ALPHABET_SIZE
            frontier.append(previous)
        if any(position not in values for position in unknown):
            return []
        return [{position: values[position] for position in unknown}]

    start = component[0]
    order = [start]
    position = mapping[start]
    while position != start:
        order.append(position)
        position = mapping[position]

    solutions: List[Assignment] = []
    for guess in range(ALPHABET_SIZE):
        values = {start: guess}
        current = guess
        closed = False
        for position in order:
            value = (cipher[position] - current) % ALPHABET_SIZE
            following = mapping[position]
            if following == start:
                closed = value == guess
                break
            values[following] = value
            current = value
        if closed:
            solutions.append(values)
    return solutions


def _classify(cycle: Sequence[int], unknown: Sequence[int]) -> ComponentKind:
    if len(unknown) < len(cycle):
        return ComponentKind.anchored
    return ComponentKind.odd_cycle if len(cycle) % 2 else ComponentKind.even_cycle


def _rank_solutions(
    solutions: List[Assignment], reference: ReferenceDistribution
) -> RankedSolutions:
    ranked = []
    for assignment in solutions:
        letters = [assignment[position] for position in sorted(assignment)]
        score = english_score(letters, reference) if letters else 0.0
        ranked.append((assignment, score, letters_to_text(letters)))
    ranked.sort(key=lambda item: (item[1], item[2]))
    return [(assignment, score) for assignment, score, _ in ranked]


def _best_first(ranked: List[RankedSolutions], limit: int) -> List[Tuple[int, ...]]:
    """The `limit` cheapest choice vectors by summed component score."""

    def cost(choice: Tuple[int, ...]) -> float:
        return sum(ranked[index][pick][1] for index, pick in enumerate(choice))

    start = (0,) * len(ranked)
    heap = [(cost(start), start)]
    seen = {start}
    picked: List[Tuple[int, ...]] = []
    while heap and len(picked) < limit:
        _, choice = heapq.heappop(heap)
        picked.append(choice)
        for index in range(len(choice)):
            if choice[index] + 1 >= len(ranked[index]):
                continue
            following = choice[:index] + (choice[index] + 1,) + choice[index + 1:]
            if following not in seen:
                seen.add(following)
                heapq.heappush(heap, (cost(following), following))
    return picked


def hybrid_decrypt(
    ciphertext: HybridCiphertext,
    policy: Optional[PaddingPolicy] = None,
    max_candidates: Optional[int] = None,
    ranking: RankingMode = RankingMode.words,
    reference: Optional[ReferenceDistribution] = None,
    lexicon: Optional[FrozenSet[str]] = None,
) -> CandidateSet:
    policy = policy or PaddingPolicy.first_key_char()
    reference = reference or load_reference_table()
    if ranking == RankingMode.words and lexicon is None:
        lexicon = load_lexicon()
    limit = max_candidates or settings.max_candidates

    order = column_order(ciphertext.keyword)
    length = ciphertext.length
    padded_length = ciphertext.padded_length
    if length == 0:
        raise HybridCipherError("ciphertext must contain at least one letter")
    pad_symbol = policy.pad_symbol(order.keyword[0])
    if pad_symbol is None:
        if padded_length != length:
            raise AlignmentError(
                f"ciphertext length {length} is not a multiple of keyword length "
                f"{order.width} and padding is disabled"
            )
        logger.warning("Decrypting without padding anchors; expect many candidates")

    sigma = permutation_of(order, padded_length)
    known = {position: pad_symbol for position in range(length, padded_length)}
    cipher = list(ciphertext.cipher)

    summaries: List[ComponentSummary] = []
    ranked: List[RankedSolutions] = []
    for cycle in sigma.cycles():
        unknown = tuple(position for position in cycle if position < length)
        if not unknown:
            continue
        solutions = solve_component(cycle, cipher, sigma, known)
        summaries.append(
            ComponentSummary(
                kind=_classify(cycle, unknown), positions=unknown, solutions=len(solutions)
            )
        )
        if not solutions:
            raise NoSolutionError("not a valid hybrid ciphertext for this keyword")
        ranked.append(_rank_solutions(solutions, reference))
    logger.debug(
        "Solved %d components: %s",
        len(summaries),
        ", ".join(f"{item.kind.value}x{item.solutions}" for item in summaries),
    )

    total = math.prod(len(solutions) for solutions in ranked)
    truncated = total > limit
    if truncated:
        logger.warning("Enumerating %d of %d candidates", limit, total)
        choices = _best_first(ranked, limit)
    else:
        choices = itertools.product(*(range(len(solutions)) for solutions in ranked))

    candidates: List[Candidate] = []
    for choice in choices:
        letters = [0] * length
        for component, pick in zip(ranked, choice):
            for position, value in component[pick][0].items():
                letters[position] = value
        plaintext = letters_to_text(letters)
        candidates.append(
            Candidate(
                plaintext=plaintext,
                score=english_score(letters, reference),
                coverage=word_coverage(plaintext, lexicon) if lexicon is not None else 0,
            )
        )

    if ranking == RankingMode.words:
        candidates.sort(key=lambda item: (-item.coverage, item.score, item.plaintext))
    else:
        candidates.sort(key=lambda item: (item.score, item.plaintext))

    return CandidateSet(
        candidates=tuple(candidates),
        components=tuple(summaries),
        total=total,
        truncated=truncated,
        ranking=ranking,
    )
