from __future__ import annotations

from typing import Optional


class HybridCipherError(ValueError):
    """Base class for every data or validation failure raised by the services."""


class InputEncodingError(HybridCipherError):
    def __init__(self, message: str, index: Optional[int] = None) -> None:
        super().__init__(message)
        self.index = index


class InvalidKeyError(HybridCipherError):
    pass


class AlignmentError(HybridCipherError):
    pass


class UndefinedStatisticError(HybridCipherError):
    pass


class NoSolutionError(HybridCipherError):
    pass


class ReferenceDataError(HybridCipherError):
    pass
