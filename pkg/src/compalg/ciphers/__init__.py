"""The six toy cryptosystems built on the algebra modules.

All of them are pedagogical and insecure by design; the contract of
every system is exact round-trip correctness over its valid message
domain, nothing more.
"""

from .rsa_ideal import RsaIdealKey, rsa_keygen, rsa_encrypt, rsa_decrypt
from .diffie_hellman import DhParams, DhExchange, dh_exchange
from .fractional import (
    FractionalKey,
    frac_encrypt,
    frac_decrypt,
    frac_decrypt_fast_path,
)
from .zone import ZoneKey, zone_encrypt, zone_decrypt
from .composite_cipher import (
    AffineCipher,
    CipherPolynomial,
    CipherText,
    cipher_product,
    cipher_sum,
    composite_cipher_keygen,
    composite_cipher_encrypt,
    composite_cipher_decrypt,
    parse_cipher,
    parse_cipher_polynomial,
    random_affine_polynomial,
)
from .monoid_cipher import (
    MonoidCipherKey,
    monoid_keygen,
    monoid_encrypt,
    monoid_decrypt,
    discrete_log_bsgs,
    discrete_log_exhaustive,
)

__all__ = [
    "RsaIdealKey", "rsa_keygen", "rsa_encrypt", "rsa_decrypt",
    "DhParams", "DhExchange", "dh_exchange",
    "FractionalKey", "frac_encrypt", "frac_decrypt", "frac_decrypt_fast_path",
    "ZoneKey", "zone_encrypt", "zone_decrypt",
    "AffineCipher", "CipherPolynomial", "CipherText",
    "cipher_product", "cipher_sum", "composite_cipher_keygen",
    "composite_cipher_encrypt", "composite_cipher_decrypt",
    "parse_cipher", "parse_cipher_polynomial", "random_affine_polynomial",
    "MonoidCipherKey", "monoid_keygen", "monoid_encrypt", "monoid_decrypt",
    "discrete_log_bsgs", "discrete_log_exhaustive",
]
