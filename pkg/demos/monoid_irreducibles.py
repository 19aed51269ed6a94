"""Numerical monoids and certified irreducible elements of Z[M].

The monoid <2,3> misses only 1; its atoms are the generators. The
constructor assembles elements of the shape p*X^m2 - X^m1 whose
irreducibility follows from the exponent conditions, and the exhaustive
search oracle re-derives that verdict with no shared logic.
"""

from compalg import (
    Integers,
    MonoidElement,
    NumericalMonoid,
    PrimeField,
    build_irreducible,
    is_irreducible_by_search,
)


def main():
    M = NumericalMonoid([2, 3])
    print(f"monoid {M!r}: members up to 10 = {M.members_upto(10)}")
    print(f"atoms up to 10: {[m for m in range(1, 11) if M.is_atom(m)]}")

    Z = Integers()
    cert = build_irreducible(Z, M, primes=[2], exponents=[2, 3])
    print(f"\nconstructed element: {cert.element!r}")
    print(f"  atom exponent m1 = {cert.atom_exponent}, "
          f"free exponents = {list(cert.gap_exponents)}, primes = {list(cert.primes)}")
    print(f"oracle verdict with bounds (exponent 6, coefficients +-4): "
          f"{is_irreducible_by_search(cert.element, 6, 4)}")

    print("\nwhy the exponent conditions matter:")
    for primes, exponents, reason in [
        ([2], [4, 3], "4 = 2 + 2 is not an atom"),
        ([2], [2, 5], "5 = 2 + 3 lies in m1 + M"),
    ]:
        try:
            build_irreducible(Z, M, primes, exponents)
        except Exception as exc:
            print(f"  build({primes}, {exponents}) -> {exc}  [{reason}]")

    print("\na reducible contrast: X^4 over F2 splits as X^2 * X^2")
    f = MonoidElement(PrimeField(2), M, {4: 1})
    print(f"oracle: irreducible={is_irreducible_by_search(f, 8)}")


if __name__ == "__main__":
    main()
