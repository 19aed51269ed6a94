"""One round trip through each of the six toy cryptosystems.

None of these are secure; the demo shows the key material each one
needs and that decryption inverts encryption exactly.
"""

import random

from compalg import decode, encode, ideal, upper_latin
from compalg.ciphers import (
    DhParams,
    FractionalKey,
    ZoneKey,
    composite_cipher_decrypt,
    composite_cipher_encrypt,
    composite_cipher_keygen,
    dh_exchange,
    frac_decrypt,
    frac_encrypt,
    monoid_decrypt,
    monoid_encrypt,
    monoid_keygen,
    parse_cipher_polynomial,
    rsa_decrypt,
    rsa_encrypt,
    rsa_keygen,
    zone_decrypt,
    zone_encrypt,
)
from compalg.keyexchange import run_dh


def main():
    az = upper_latin()

    print("== ideal-key multiplicative cipher ==")
    key = rsa_keygen(ideal(3), ideal(11), ideal(3))
    msg = encode("ABACAB", az)
    ct = rsa_encrypt(msg, key)
    print(f"N={key.modulus!r} E={key.e!r} D={key.d!r} PHI={key.phi!r}")
    print(f"ABACAB -> {msg} -> {ct} -> {decode(rsa_decrypt(ct, key), az)}")

    print("\n== shared-ideal derivation ==")
    ex = dh_exchange(DhParams(ideal(7), ideal(10)), 3, 4)
    print(f"publics A={ex.public_first!r} B={ex.public_second!r}; "
          f"both derive {ex.shared_first!r}")
    run = run_dh(DhParams(ideal(7), ideal(10)), seed_first=1, seed_second=2)
    print("transcript with seeded secrets:")
    for line in run.transcript.serialize().splitlines():
        print(f"  {line}")

    print("\n== multiplier cipher ==")
    fkey = FractionalKey(29, 7)
    xs = [5, 17, 29]
    ys = frac_encrypt(xs, fkey)
    print(f"|A|=29 k=7: {xs} -> {ys} -> {frac_decrypt(ys, fkey)}")

    print("\n== zone cipher ==")
    zkey = ZoneKey(29, 5, 3)
    vs = [7, 1, 29]
    pairs = zone_encrypt(vs, zkey)
    print(f"p=29 q=5 k=3: {vs} -> {pairs} -> {zone_decrypt(pairs, zkey)}")

    print("\n== composite-keyed block cipher ==")
    f = parse_cipher_polynomial("poly[aff(1,1,26),aff(1,2,26)]")
    g = parse_cipher_polynomial("poly[aff(3,0,26)]")
    fg = composite_cipher_keygen(f, g)
    print(f"fg = {fg.descriptor()}")
    msg = encode("HELLO", az)
    ct = composite_cipher_encrypt(msg, fg)
    print(f"HELLO -> {ct.to_text()} -> "
          f"{decode(composite_cipher_decrypt(ct, fg), az)}")

    print("\n== exponent cipher (discrete-log decryption) ==")
    mkey = monoid_keygen(29, random.Random(1), num_coefficients=4)
    msg = encode("ABACAB", az)
    ct = monoid_encrypt(msg, mkey)
    print(f"p={mkey.alphabet_size} X={mkey.base} a={list(mkey.coefficients)}")
    print(f"ABACAB -> {ct} -> {decode(monoid_decrypt(ct, mkey), az)}")


if __name__ == "__main__":
    main()
