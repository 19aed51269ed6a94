"""Tour of the coefficient rings and polynomial predicates.

Walks the four ring kinds, shows where units and nilpotents live, and
lets the brute-force oracles confirm the classical criteria.
"""

from compalg import (
    IntegersMod,
    Polynomial,
    PrimeField,
    default_extension_field,
    embed,
    search_inverse,
)


def main():
    print("== rings ==")
    Z12 = IntegersMod(12)
    six = Z12.element(6)
    print(f"6 in Z/12: unit={six.is_unit()} nilpotent={six.is_nilpotent()}  (6^2 = 36 = 0)")

    F4 = default_extension_field(2, 2)
    t = F4.element((0, 1))
    print(f"{F4.name()}: t * t = {(t * t).text()}")
    print(f"t^{{-1}} = {t.inverse().text()},  t * t^-1 = {(t * t.inverse()).text()}")

    F2 = PrimeField(2)
    print(f"embedding F2 -> F4 sends 1 to {embed(F2.one(), F4).text()}")

    print()
    print("== polynomial units: nilpotent tails ==")
    Z4 = IntegersMod(4)
    f = Polynomial(Z4, [1, 2])
    print(f"f = 1 + 2X over Z/4: is_unit={f.is_unit()}")
    inv = search_inverse(f, 4)
    print(f"brute-force inverse search agrees: f^-1 = {inv!r}  (f squared is 1)")

    Z6 = IntegersMod(6)
    g = Polynomial(Z6, [1, 2])
    print(f"g = 1 + 2X over Z/6: is_unit={g.is_unit()}, search finds {search_inverse(g, 8)}")

    print()
    print("== factorization over finite fields ==")
    h = Polynomial(F2, [1, 0, 1, 0, 1])  # X^4 + X^2 + 1
    fac = h.factor()
    print(f"X^4+X^2+1 over F2 = {fac!r}")
    print(f"reassembles exactly: {fac.product() == h}")
    q = Polynomial(F2, [1, 1, 1])
    print(f"X^2+X+1 irreducible over F2: {q.is_irreducible()}")


if __name__ == "__main__":
    main()
