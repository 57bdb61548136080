from . import analyze, chart, decrypt, encrypt, kasiski, schema, tabula

COMMANDS = [encrypt, decrypt, analyze, kasiski, chart, tabula, schema]

__all__ = [
    "analyze",
    "chart",
    "decrypt",
    "encrypt",
    "kasiski",
    "schema",
    "tabula",
    "COMMANDS",
]
