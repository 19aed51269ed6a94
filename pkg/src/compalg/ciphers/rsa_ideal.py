"""Ideal-based multiplicative cipher in the style of RSA key setup.

Keys are principal ideals: N = PQ for distinct prime ideals, the
totient ideal carries (p-1)(q-1), and the encryption/decryption pair
satisfies e*d = 1 modulo the totient. Unlike real RSA the cipher is
multiplicative, C = M*e mod phi, exactly as specified by its source;
this keeps the round trip exact for messages below phi but offers no
security whatsoever.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from ..errors import FormatError, ParameterError
from ..ideals import PrincipalIdeal, inverse_ideal, totient_ideal


@dataclass(frozen=True)
class RsaIdealKey:
    """Full key material; (modulus, e) is notionally public, (d, phi) private."""

    modulus: PrincipalIdeal  # N = PQ
    e: PrincipalIdeal
    d: PrincipalIdeal
    phi: PrincipalIdeal

    def max_message(self) -> int:
        """Messages must lie in [0, phi)."""
        return self.phi.generator - 1


def rsa_keygen(p: PrincipalIdeal, q: PrincipalIdeal, e: PrincipalIdeal) -> RsaIdealKey:
    """Validate parameters and derive d with e*d = 1 mod phi.

    Raises ParameterError naming the violated clause: non-prime or equal
    generators, e out of the open range (1, phi), or gcd(e, phi) != 1.
    """
    phi = totient_ideal(p, q)  # checks primality and distinctness
    ev, phiv = e.generator, phi.generator
    if not 1 < ev < phiv:
        raise ParameterError(f"e = {ev} must satisfy 1 < e < phi = {phiv}")
    if gcd(ev, phiv) != 1:
        raise ParameterError(f"gcd(e, phi) = {gcd(ev, phiv)} != 1")
    d = inverse_ideal(e, phi)
    return RsaIdealKey(p * q, e, d, phi)


def rsa_encrypt(values: Iterable[int], key: RsaIdealKey) -> list[int]:
    """C_i = M_i * e mod phi; every M_i must lie in [0, phi)."""
    phi = key.phi.generator
    e = key.e.generator
    out = []
    for i, m in enumerate(values):
        if not 0 <= m < phi:
            raise ParameterError(
                f"message value {m} at position {i} is outside [0, {phi})"
            )
        out.append(m * e % phi)
    return out


def rsa_decrypt(values: Iterable[int], key: RsaIdealKey) -> list[int]:
    """M_i = C_i * d mod phi, exact because e*d = 1 mod phi."""
    phi = key.phi.generator
    d = key.d.generator
    return [c * d % phi for c in values]


# key file form: rsa-ideal v1 N=(33) E=(3) D=(7) PHI=(20)


def key_to_text(key: RsaIdealKey) -> str:
    return (
        f"rsa-ideal v1 N={key.modulus!r} E={key.e!r} "
        f"D={key.d!r} PHI={key.phi!r}"
    )


def key_from_text(text: str) -> RsaIdealKey:
    parts = text.split()
    if parts[:2] != ["rsa-ideal", "v1"]:
        raise FormatError("not an rsa-ideal v1 key record")
    fields = dict(part.split("=", 1) for part in parts[2:])
    try:
        vals = {
            name: PrincipalIdeal(int(fields[name][1:-1]))
            for name in ("N", "E", "D", "PHI")
        }
    except (KeyError, ValueError):
        raise FormatError("rsa-ideal key record is missing fields") from None
    return RsaIdealKey(vals["N"], vals["E"], vals["D"], vals["PHI"])
