"""Multiplier cipher over a prime-length alphabet.

Encryption is y = x*k mod |A| for letter values x in [2, |A|]. The
general decryption solves for the unique t in [0, k) making y + t*|A|
divisible by k, then divides exactly; the recovered 0 residue is mapped
back to |A|. A published shortcut that replaces t by k - (y mod k) is
kept as a fast path: it agrees with the general rule whenever
|A| = 1 (mod k) and fails otherwise, which the test suite exhibits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from ..arith import is_prime
from ..errors import ParameterError


@dataclass(frozen=True)
class FractionalKey:
    """Alphabet length (prime) and multiplier key k, 2 <= k < |A|, coprime."""

    alphabet_size: int
    k: int

    def __post_init__(self):
        if not is_prime(self.alphabet_size):
            raise ParameterError(f"alphabet size {self.alphabet_size} must be prime")
        if self.k < 2:
            raise ParameterError(f"key k = {self.k} must be >= 2")
        if self.k >= self.alphabet_size:
            raise ParameterError(
                f"key k = {self.k} must be below the alphabet size {self.alphabet_size}"
            )
        if gcd(self.k, self.alphabet_size) != 1:
            raise ParameterError("k must be coprime to the alphabet size")


def _check_plain(x: int, key: FractionalKey):
    if not 2 <= x <= key.alphabet_size:
        raise ParameterError(
            f"letter value {x} is outside [2, {key.alphabet_size}]"
        )


def frac_encrypt_letter(x: int, key: FractionalKey) -> int:
    _check_plain(x, key)
    return x * key.k % key.alphabet_size


def frac_decrypt_letter(y: int, key: FractionalKey) -> int:
    """Solve t = -y * |A|^(-1) mod k, return (y + t|A|)/k; 0 maps to |A|."""
    a, k = key.alphabet_size, key.k
    if not 0 <= y < a:
        raise ParameterError(f"ciphertext value {y} is outside [0, {a})")
    t = (-y * pow(a, -1, k)) % k
    x = (y + t * a) // k
    assert (y + t * a) % k == 0
    x = a if x == 0 else x
    _check_plain(x, key)
    return x


def frac_decrypt_letter_fast_path(y: int, key: FractionalKey) -> Optional[int]:
    """Shortcut using t = (k - (y mod k)) mod k; exact division may fail.

    The displayed form of this rule leaves k - d unreduced, but its own
    correctness argument reduces it mod k, which is what we do (the
    unreduced variant shifts every k-divisible y by one alphabet
    length). Returns None when the division is not exact; agreement
    with frac_decrypt_letter is guaranteed only when |A| = 1 (mod k).
    """
    a, k = key.alphabet_size, key.k
    t = (k - y % k) % k
    total = y + t * a
    if total % k != 0:
        return None
    x = total // k
    return a if x == 0 else x


def frac_encrypt(values: Iterable[int], key: FractionalKey) -> list[int]:
    return [frac_encrypt_letter(x, key) for x in values]


def frac_decrypt(values: Iterable[int], key: FractionalKey) -> list[int]:
    return [frac_decrypt_letter(y, key) for y in values]


def frac_decrypt_fast_path(values: Iterable[int], key: FractionalKey) -> list[Optional[int]]:
    return [frac_decrypt_letter_fast_path(y, key) for y in values]
