from __future__ import annotations

import argparse
from pathlib import Path

from ..models import NormalizedText, letters_to_text
from ..schemas import TextLayout
from ..services.columnar import column_order, encrypt_columnar, grid_of
from ..services.hybrid import hybrid_encrypt
from ..services.text_codec import normalize, pad_to_block
from ..services.vigenere import caesar_encrypt, vigenere_encrypt
from .common import (
    CommandIO,
    add_io_arguments,
    add_padding_argument,
    read_input,
    write_layout,
    write_output,
)


def _scheme_parser(schemes, name: str, help_text: str) -> argparse.ArgumentParser:
    parser = schemes.add_parser(name, help=help_text)
    add_io_arguments(parser)
    parser.add_argument(
        "--layout-out",
        type=Path,
        metavar="FILE",
        help="save the stripped non-letter characters as JSON for decrypt --layout",
    )
    return parser


def register(subparsers) -> None:
    parser = subparsers.add_parser("encrypt", help="encrypt a message")
    schemes = parser.add_subparsers(dest="scheme", required=True, metavar="SCHEME")

    caesar = _scheme_parser(schemes, "caesar", "shift every letter by N")
    caesar.add_argument("--shift", type=int, required=True)
    caesar.set_defaults(handler=encrypt_caesar)

    vigenere = _scheme_parser(schemes, "vigenere", "add a repeating keyword")
    vigenere.add_argument("--key", required=True)
    vigenere.set_defaults(handler=encrypt_vigenere)

    columnar = _scheme_parser(schemes, "columnar", "keyword columnar transposition")
    columnar.add_argument("--key", required=True)
    add_padding_argument(columnar)
    columnar.add_argument("--show-grid", action="store_true", help="print the grid to stderr")
    columnar.set_defaults(handler=encrypt_columnar_command)

    hybrid = _scheme_parser(schemes, "hybrid", "Vigenère keyed by the columnar ciphertext")
    hybrid.add_argument("--key", required=True)
    add_padding_argument(hybrid)
    hybrid.add_argument(
        "--emit-intermediate",
        action="store_true",
        help="also print the columnar ciphertext used as the Vigenère key",
    )
    hybrid.add_argument("--show-grid", action="store_true", help="print the grid to stderr")
    hybrid.set_defaults(handler=encrypt_hybrid)


def _message(args: argparse.Namespace, io: CommandIO) -> NormalizedText:
    message = normalize(read_input(args, io))
    write_layout(args.layout_out, TextLayout.of(message))
    return message


def _show_grid(args: argparse.Namespace, io: CommandIO, message: NormalizedText) -> None:
    if not args.show_grid:
        return
    order = column_order(args.key)
    padded = pad_to_block(message, order.width, args.pad, order.keyword[0])
    io.stderr.write(grid_of(padded, order).render(order) + "\n")


def encrypt_caesar(args: argparse.Namespace, io: CommandIO) -> int:
    message = _message(args, io)
    write_output(args, io, letters_to_text(caesar_encrypt(message, args.shift)) + "\n")
    return 0


def encrypt_vigenere(args: argparse.Namespace, io: CommandIO) -> int:
    message = _message(args, io)
    write_output(args, io, letters_to_text(vigenere_encrypt(message, args.key)) + "\n")
    return 0


def encrypt_columnar_command(args: argparse.Namespace, io: CommandIO) -> int:
    message = _message(args, io)
    _show_grid(args, io, message)
    cipher = encrypt_columnar(message, args.key, args.pad)
    write_output(args, io, letters_to_text(cipher) + "\n")
    return 0


def encrypt_hybrid(args: argparse.Namespace, io: CommandIO) -> int:
    message = _message(args, io)
    _show_grid(args, io, message)
    result = hybrid_encrypt(message, args.key, args.pad)
    lines = [result.cipher_text]
    if args.emit_intermediate:
        lines.append(result.intermediate_text)
    write_output(args, io, "\n".join(lines) + "\n")
    return 0
