"""Dense univariate polynomials over any ring descriptor.

Provides the classical unit and nilpotency criteria (constant term a
unit plus nilpotent higher coefficients), plus brute-force
irreducibility, factorization and inverse search at desk scale.
Factor order is canonical: ascending degree, then ascending
little-endian coefficient order, so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import ParameterError, RingMismatchError
from .rings import Ring, RingElement

#: hard cap for search_inverse, documented in the operation contract
INVERSE_SEARCH_MAX_BOUND = 8


class Polynomial:
    """Immutable dense polynomial; coeffs little-endian with no trailing zeros."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Sequence = ()):
        elems = []
        for c in coeffs:
            if isinstance(c, RingElement):
                if c.ring != ring:
                    raise RingMismatchError(
                        f"coefficient ring {c.ring.name()} != {ring.name()}"
                    )
                elems.append(c)
            else:
                elems.append(ring.element(c))
        while elems and elems[-1].is_zero():
            elems.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(elems))

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # basic structure ------------------------------------------------
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> RingElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def constant(self) -> RingElement:
        return self.coeff(0)

    def leading(self) -> RingElement:
        if self.is_zero():
            return self.ring.zero()
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"{self.ring.name()}:[{','.join(c.text() for c in self.coeffs)}]"

    # arithmetic -----------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            raise RingMismatchError("polynomial ring mismatch")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.ring, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return Polynomial(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.ring)
        out = [self.ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.ring, out)

    def __pow__(self, e: int):
        out = Polynomial(self.ring, [self.ring.one()])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: RingElement) -> "Polynomial":
        return Polynomial(self.ring, [c * a for a in self.coeffs])

    def shift(self, r: int) -> "Polynomial":
        """Multiply by X^r."""
        if self.is_zero():
            return self
        return Polynomial(self.ring, [self.ring.zero()] * r + list(self.coeffs))

    def evaluate(self, x: RingElement) -> RingElement:
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other):
        """Long division; requires an invertible leading coefficient in the divisor."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = other.leading().inverse()
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(self.ring), self
        q = [self.ring.zero()] * (dq + 1)
        for shift in range(dq, -1, -1):
            top = rem[shift + other.degree()]
            if top.is_zero():
                continue
            c = top * inv_lead
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
        return Polynomial(self.ring, q), Polynomial(self.ring, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())

    # ordering -------------------------------------------------------
    def sort_key(self):
        """(degree, little-endian coefficient keys): the canonical order."""
        return (self.degree(), tuple(c.sort_key() for c in self.coeffs))

    # predicates from the classical criteria ---------------------------
    def is_unit(self) -> bool:
        """Constant term a unit and every higher coefficient nilpotent."""
        if self.is_zero():
            return False
        if not self.coeffs[0].is_unit():
            return False
        return all(c.is_nilpotent() for c in self.coeffs[1:])

    def is_nilpotent(self) -> bool:
        """Every coefficient nilpotent (true for the zero polynomial)."""
        return all(c.is_nilpotent() for c in self.coeffs)

    def is_irreducible(self) -> bool:
        """Brute-force irreducibility over a finite field.

        True when f admits no factorization g*h with deg g, deg h >= 1,
        decided by trial division by every monic polynomial of degree
        up to deg(f)/2.
        """
        if not self.ring.is_field or self.ring.size() is None:
            raise ParameterError(
                f"irreducibility requires a finite field, not {self.ring.name()}"
            )
        if self.degree() < 1:
            raise ParameterError("irreducibility is defined for degree >= 1")
        for d in range(1, self.degree() // 2 + 1):
            for g in monic_polynomials(self.ring, d):
                if g.divides(self):
                    return False
        return True

    def factor(self) -> "Factorization":
        """Complete factorization over a finite field by trial division."""
        if not self.ring.is_field or self.ring.size() is None:
            raise ParameterError(
                f"factorization requires a finite field, not {self.ring.name()}"
            )
        if self.is_zero():
            raise ParameterError("cannot factor the zero polynomial")
        unit = self.leading()
        rest = self.monic()
        factors: list[tuple[Polynomial, int]] = []
        d = 1
        while 2 * d <= rest.degree():
            for q in irreducible_monic_polynomials(self.ring, d):
                mult = 0
                while q.divides(rest):
                    rest = rest // q
                    mult += 1
                if mult:
                    factors.append((q, mult))
                if 2 * d > rest.degree():
                    break
            d += 1
        if rest.degree() >= 1:
            factors.append((rest, 1))
        return Factorization(unit, tuple(factors))


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity); factors monic irreducible, sorted."""

    unit: RingElement
    factors: tuple[tuple[Polynomial, int], ...]

    def product(self) -> Polynomial:
        ring = self.unit.ring
        out = Polynomial(ring, [self.unit])
        for f, m in self.factors:
            out = out * f ** m
        return out

    def __repr__(self):
        parts = " * ".join(f"({f!r})^{m}" for f, m in self.factors)
        return f"{self.unit.text()} * {parts}" if parts else self.unit.text()


# ---------------------------------------------------------------------------
# enumeration


def all_polynomials(ring: Ring, max_degree: int) -> Iterator[Polynomial]:
    """Every polynomial of degree <= max_degree over a finite ring, canonical order."""
    if ring.size() is None:
        raise ParameterError(f"{ring.name()} is not finite")
    elems = list(ring.elements())
    yield Polynomial(ring)
    for d in range(max_degree + 1):
        stack = [[]]
        for _ in range(d):
            stack = [pre + [e] for pre in stack for e in elems]
        for pre in stack:
            for lead in elems[1:]:
                yield Polynomial(ring, pre + [lead])


def monic_polynomials(ring: Ring, degree: int) -> Iterator[Polynomial]:
    """Monic polynomials of exactly the given degree, canonical order."""
    if ring.size() is None:
        raise ParameterError(f"{ring.name()} is not finite")
    elems = list(ring.elements())
    prefixes = [[]]
    for _ in range(degree):
        prefixes = [pre + [e] for pre in prefixes for e in elems]
    for pre in prefixes:
        yield Polynomial(ring, pre + [ring.one()])


@lru_cache(maxsize=None)
def irreducible_monic_polynomials(ring: Ring, degree: int) -> tuple[Polynomial, ...]:
    """Cached list of monic irreducibles of the given degree, canonical order."""
    return tuple(
        f for f in monic_polynomials(ring, degree) if f.is_irreducible()
    )


# ---------------------------------------------------------------------------
# inverse search oracle


def search_inverse(f: Polynomial, degree_bound: int) -> Optional[Polynomial]:
    """Exhaustive search for g with f*g == 1 and deg g <= degree_bound.

    Candidates are enumerated coefficient by coefficient; a prefix is kept
    only while it satisfies the convolution equations (f*g)_m = [m == 0],
    which every genuine inverse must satisfy, so no solution is skipped.
    Surviving candidates are verified by a full product check. Independent
    of the unit criterion in Polynomial.is_unit.
    """
    ring = f.ring
    if ring.size() is None:
        raise ParameterError(f"inverse search requires a finite ring, not {ring.name()}")
    if degree_bound > INVERSE_SEARCH_MAX_BOUND:
        raise ParameterError(
            f"degree_bound {degree_bound} exceeds ceiling {INVERSE_SEARCH_MAX_BOUND}"
        )
    if f.is_zero():
        return None
    one = ring.one()
    zero = ring.zero()
    elems = list(ring.elements())
    f0 = f.coeff(0)

    def extend(prefix: list[RingElement]) -> Optional[Polynomial]:
        m = len(prefix)
        if m == degree_bound + 1:
            g = Polynomial(ring, prefix)
            if (f * g) == Polynomial(ring, [one]):
                return g
            return None
        target = one if m == 0 else zero
        acc = zero
        for j in range(m):
            acc = acc + f.coeff(m - j) * prefix[j]
        need = target - acc
        for e in elems:
            if f0 * e == need:
                found = extend(prefix + [e])
                if found is not None:
                    return found
        return None

    return extend([])
