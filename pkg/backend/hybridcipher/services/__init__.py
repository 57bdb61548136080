from .charts import emit_chart
from .columnar import column_order, decrypt_columnar, encrypt_columnar, permutation_of
from .cryptanalysis import (
    analyze,
    chi_squared,
    compare_reported,
    dispersion,
    english_score,
    entropy,
    frequency_profile,
    friedman_keylength,
    coincidence_table,
    index_of_coincidence,
    kasiski,
    kasiski_factors,
    reference_dispersion,
    shift_coincidence,
    word_coverage,
)
from .hybrid import hybrid_decrypt, hybrid_decrypt_known_intermediate, hybrid_encrypt
from .text_codec import normalize, pad_to_block, unpad
from .vigenere import caesar_decrypt, caesar_encrypt, vigenere_decrypt, vigenere_encrypt

__all__ = [
    "emit_chart",
    "column_order",
    "decrypt_columnar",
    "encrypt_columnar",
    "permutation_of",
    "analyze",
    "chi_squared",
    "compare_reported",
    "dispersion",
    "english_score",
    "entropy",
    "frequency_profile",
    "friedman_keylength",
    "index_of_coincidence",
    "coincidence_table",
    "kasiski",
    "kasiski_factors",
    "reference_dispersion",
    "shift_coincidence",
    "word_coverage",
    "hybrid_decrypt",
    "hybrid_decrypt_known_intermediate",
    "hybrid_encrypt",
    "normalize",
    "pad_to_block",
    "unpad",
    "caesar_decrypt",
    "caesar_encrypt",
    "vigenere_decrypt",
    "vigenere_encrypt",
]
