"""Factorization life inside a tower-constrained subring.

Elements of F2 + X*F4[X] factor differently than they do in F4[X]:
the constant term of every factor is pinned to the base field. The
exhaustive oracle double-checks each claim, and a two-level tower shows
a genuine atom that would split if the coefficients were free.
"""

from functools import reduce
from operator import mul

from compalg import (
    CompositeElement,
    PrimeField,
    Tower,
    atomize,
    default_extension_field,
    divisor_chain,
    has_nontrivial_factorization,
)

F2 = PrimeField(2)
F4 = default_extension_field(2, 2)


def show(f, label):
    print(f"{label}: irreducible={f.is_irreducible()}, "
          f"oracle finds factorization={has_nontrivial_factorization(f)}")


def main():
    tower = Tower([F2], F4)
    t = F4.element((0, 1))
    zero, one = F4.zero(), F4.one()

    print(f"tower: F2 < F4, elements are a0 + a1 X + ... with a0 in F2")
    show(CompositeElement.make(tower, [zero, t]), "tX  ")
    show(CompositeElement.make(tower, [one, t]), "1+tX")
    x2 = CompositeElement.make(tower, [zero, zero, one])
    show(x2, "X^2 ")
    atoms = atomize(x2)
    print(f"X^2 factors into {[repr(a.poly) for a in atoms]}, product equals X^2: "
          f"{reduce(mul, atoms) == x2}")

    print()
    print("divisor chain from X^3 (each step divides out one atom):")
    x3 = CompositeElement.make(tower, [zero, zero, zero, one])
    chain = divisor_chain(x3, 10)
    for elem in chain.elements:
        print(f"  {elem.poly!r}")
    print(f"terminated at an atom: {chain.terminated} after {chain.steps} steps")

    print()
    print("two constrained levels: F2 + F2*X + X^2*F4[X]")
    deep = Tower([F2, F2], F4)
    f = CompositeElement.make(deep, [zero, zero, t])
    print(f"tX^2 splits in F4[X] as (tX)(X): {not f.poly.is_irreducible()}")
    print(f"but no factor pair respects the levels, so it is an atom here: "
          f"{f.is_irreducible()}")


if __name__ == "__main__":
    main()
