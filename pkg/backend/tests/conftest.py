from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

FOREST_TEXT = "IN THE FOREST THERE ARE MANY TREES WITH THE SAME HEIGHT"
FOREST_LETTERS = "INTHEFORESTTHEREAREMANYTREESWITHTHESAMEHEIGHT"
FOREST_CIPHER1 = "HRTEMTSHSHHTNFSERNEIHMITIEEHAARWTAETTOTREYETEEGT"
FOREST_CIPHER = "PEMLQYGYWZAMUJJIREIUHZGMZIIZWIKDMHILTAXYIGKAX"


@pytest.fixture
def forest_text() -> str:
    return FOREST_TEXT


@pytest.fixture
def forest_letters() -> str:
    return FOREST_LETTERS


@pytest.fixture
def forest_cipher1() -> str:
    return FOREST_CIPHER1


@pytest.fixture
def forest_cipher() -> str:
    return FOREST_CIPHER
