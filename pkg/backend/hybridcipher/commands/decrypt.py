from __future__ import annotations

import argparse
from pathlib import Path
from typing import List, Sequence

from ..models import HybridCiphertext, RankingMode, letters_to_text
from ..schemas import CandidateLine
from ..services.columnar import decrypt_columnar
from ..services.hybrid import hybrid_decrypt, hybrid_decrypt_known_intermediate
from ..services.reference_data import load_reference_table
from ..services.text_codec import normalize
from ..services.vigenere import caesar_decrypt, vigenere_decrypt
from .common import (
    CommandIO,
    add_io_arguments,
    add_padding_argument,
    positive_int,
    read_input,
    read_layout,
    write_output,
)


def _scheme_parser(schemes, name: str, help_text: str) -> argparse.ArgumentParser:
    parser = schemes.add_parser(name, help=help_text)
    add_io_arguments(parser)
    parser.add_argument(
        "--layout",
        type=Path,
        metavar="FILE",
        help="re-insert the non-letter characters saved by encrypt --layout-out",
    )
    return parser


def register(subparsers) -> None:
    parser = subparsers.add_parser("decrypt", help="decrypt a ciphertext")
    schemes = parser.add_subparsers(dest="scheme", required=True, metavar="SCHEME")

    caesar = _scheme_parser(schemes, "caesar", "undo a shift of N")
    caesar.add_argument("--shift", type=int, required=True)
    caesar.set_defaults(handler=decrypt_caesar)

    vigenere = _scheme_parser(schemes, "vigenere", "subtract a repeating keyword")
    vigenere.add_argument("--key", required=True)
    vigenere.set_defaults(handler=decrypt_vigenere)

    columnar = _scheme_parser(schemes, "columnar", "undo a keyword columnar transposition")
    columnar.add_argument("--key", required=True)
    columnar.add_argument(
        "--length", type=positive_int, help="drop the padding beyond the first N letters"
    )
    columnar.set_defaults(handler=decrypt_columnar_command)

    hybrid = _scheme_parser(schemes, "hybrid", "recover the plaintext from the keyword alone")
    hybrid.add_argument("--key", required=True)
    add_padding_argument(hybrid)
    hybrid.add_argument(
        "--intermediate",
        metavar="CIPHER1",
        help="decrypt with a known columnar ciphertext instead of solving",
    )
    hybrid.add_argument(
        "--all-candidates",
        action="store_true",
        help="print every ranked candidate as a JSON line",
    )
    hybrid.add_argument("--max-candidates", type=positive_int, help="cap on enumerated candidates")
    hybrid.add_argument(
        "--rank",
        choices=[mode.value for mode in RankingMode],
        default=RankingMode.words.value,
        help="words: lexicon coverage then chi-squared (default); chi2: chi-squared only",
    )
    hybrid.add_argument("--english-table", type=Path, help="English monogram table (csv)")
    hybrid.set_defaults(handler=decrypt_hybrid)


def _render(args: argparse.Namespace, letters: Sequence[int]) -> str:
    layout = read_layout(args.layout)
    if layout is None:
        return letters_to_text(letters)
    return layout.restore(letters)


def _cipher(args: argparse.Namespace, io: CommandIO) -> List[int]:
    return list(normalize(read_input(args, io)).letters)


def decrypt_caesar(args: argparse.Namespace, io: CommandIO) -> int:
    plaintext = caesar_decrypt(_cipher(args, io), args.shift)
    write_output(args, io, _render(args, plaintext) + "\n")
    return 0


def decrypt_vigenere(args: argparse.Namespace, io: CommandIO) -> int:
    plaintext = vigenere_decrypt(_cipher(args, io), args.key)
    write_output(args, io, _render(args, plaintext) + "\n")
    return 0


def decrypt_columnar_command(args: argparse.Namespace, io: CommandIO) -> int:
    padded = decrypt_columnar(_cipher(args, io), args.key)
    if args.length is not None and args.layout is None:
        padded = padded[: args.length]
    write_output(args, io, _render(args, padded) + "\n")
    return 0


def decrypt_hybrid(args: argparse.Namespace, io: CommandIO) -> int:
    cipher = _cipher(args, io)
    if args.intermediate is not None:
        plaintext = hybrid_decrypt_known_intermediate(cipher, normalize(args.intermediate))
        write_output(args, io, _render(args, plaintext) + "\n")
        return 0

    result = hybrid_decrypt(
        HybridCiphertext.from_cipher(cipher, args.key),
        policy=args.pad,
        max_candidates=args.max_candidates,
        ranking=RankingMode(args.rank),
        reference=load_reference_table(args.english_table),
    )
    if args.all_candidates:
        lines = [
            CandidateLine(
                rank=rank,
                plaintext=candidate.plaintext,
                score=candidate.score,
                coverage=candidate.coverage,
            ).model_dump_json()
            for rank, candidate in enumerate(result.candidates, start=1)
        ]
        write_output(args, io, "\n".join(lines) + "\n")
        return 0

    best = normalize(result.best.plaintext).letters
    write_output(args, io, _render(args, best) + "\n")
    return 0
