"""Monoid domains B[M] over numerical monoids M.

M is a finitely generated submonoid of the nonnegative integers, so
membership is decidable by coin-problem dynamic programming. Elements
are sparse exponent -> coefficient maps; every exponent must be a
member of M. The module also builds the certified irreducible elements
of the shape p(r-1)*X^m(r) - ... - p1*X^m2 - X^m1 and verifies them with
a brute-force factorization search.

Restricting to numerical monoids is what keeps everything decidable;
it also grants the construction's standing hypotheses for free (the
difference group is Z: integrally closed, no nontrivial divisible
elements, ascending chains of cyclic subgroups stabilize). Those are
assumed, not checked, and would need revisiting for any wider monoid
class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .arith import divisors, is_prime
from .errors import (
    CeilingError,
    MembershipError,
    ParameterError,
    RingMismatchError,
)
from .rings import Integers, Ring, RingElement


class NumericalMonoid:
    """Submonoid of (N0, +) generated by finitely many positive integers."""

    __slots__ = ("generators", "_table")

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] <= 0:
            raise ParameterError("generators must be positive integers")
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_table", [True])  # membership DP, index 0

    def __setattr__(self, *_):
        raise AttributeError("NumericalMonoid is immutable")

    def __eq__(self, other):
        return isinstance(other, NumericalMonoid) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"M<{','.join(str(g) for g in self.generators)}>"

    def contains(self, m: int) -> bool:
        """Is m a nonnegative integer combination of the generators?"""
        if m < 0:
            raise ParameterError(f"monoid membership is defined for m >= 0, got {m}")
        table = self._table
        while len(table) <= m:
            i = len(table)
            table.append(any(i >= g and table[i - g] for g in self.generators))
        return table[m]

    def __contains__(self, m: int) -> bool:
        return self.contains(m)

    def members_upto(self, bound: int) -> list[int]:
        return [m for m in range(bound + 1) if self.contains(m)]

    def is_atom(self, m: int) -> bool:
        """m is a member with no decomposition into two nonzero members."""
        if m <= 0 or not self.contains(m):
            return False
        return not any(
            self.contains(a) and self.contains(m - a) for a in range(1, m) if m - a > 0
        )

    def in_shifted(self, m: int, base: int) -> bool:
        """Is m in base + M?"""
        return m >= base and self.contains(m - base)


class MonoidElement:
    """Sparse element of B[M]: finitely many terms coeff * X^exponent."""

    __slots__ = ("ring", "monoid", "terms")

    def __init__(self, ring: Ring, monoid: NumericalMonoid, terms):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        cleaned: dict[int, RingElement] = {}
        for exp, coeff in items:
            exp = int(exp)
            if not monoid.contains(exp):
                raise MembershipError(f"exponent {exp} is not in {monoid!r}")
            elem = coeff if isinstance(coeff, RingElement) else ring.element(coeff)
            if elem.ring != ring:
                raise RingMismatchError("coefficient ring mismatch")
            if exp in cleaned:
                elem = cleaned[exp] + elem
            if elem.is_zero():
                cleaned.pop(exp, None)
            else:
                cleaned[exp] = elem
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "monoid", monoid)
        object.__setattr__(self, "terms", tuple(sorted(cleaned.items())))

    def __setattr__(self, *_):
        raise AttributeError("MonoidElement is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MonoidElement)
            and self.ring == other.ring
            and self.monoid == other.monoid
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.monoid, self.terms))

    def __repr__(self):
        body = ",".join(f"{e}:{c.text()}" for e, c in self.terms)
        return f"{self.ring.name()}:{self.monoid!r}:{{{body}}}"

    def is_zero(self) -> bool:
        return not self.terms

    def max_exponent(self) -> int:
        """Largest exponent with a nonzero coefficient; -1 for zero."""
        return self.terms[-1][0] if self.terms else -1

    def coeff(self, exp: int) -> RingElement:
        for e, c in self.terms:
            if e == exp:
                return c
        return self.ring.zero()

    def _check(self, other):
        if (
            not isinstance(other, MonoidElement)
            or other.ring != self.ring
            or other.monoid != self.monoid
        ):
            raise RingMismatchError("monoid element mismatch")

    def __add__(self, other):
        self._check(other)
        return MonoidElement(
            self.ring, self.monoid, list(self.terms) + list(other.terms)
        )

    def __neg__(self):
        return MonoidElement(self.ring, self.monoid, [(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        acc: dict[int, RingElement] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                prod = c1 * c2
                acc[e] = acc[e] + prod if e in acc else prod
        return MonoidElement(self.ring, self.monoid, acc)

    def is_unit(self) -> bool:
        """A term at exponent 0 with a unit coefficient, all others nilpotent.

        Over a domain this degenerates to: exactly a unit constant.
        """
        has_unit_constant = False
        for e, c in self.terms:
            if e == 0 and c.is_unit():
                has_unit_constant = True
            elif not c.is_nilpotent():
                return False
        return has_unit_constant

    def is_nilpotent(self) -> bool:
        return all(c.is_nilpotent() for _, c in self.terms)


# ---------------------------------------------------------------------------
# the certified irreducible construction


@dataclass(frozen=True)
class IrreducibleCertificate:
    """An element certified irreducible by its construction preconditions."""

    element: MonoidElement
    atom_exponent: int
    gap_exponents: tuple[int, ...]
    primes: tuple[int, ...]


def build_irreducible(
    ring: Ring,
    monoid: NumericalMonoid,
    primes: Iterable[int],
    exponents: Iterable[int],
) -> IrreducibleCertificate:
    """Construct p(r-1)*X^m(r) - ... - p1*X^m2 - X^m1 with checked preconditions.

    exponents = [m1, ..., mr]; m1 must be an atom of the monoid, every
    later exponent must be a member outside m1 + M, and the coefficient
    ring must be the integers (the only supported ring with genuine
    prime elements; fields have none). Violations raise ParameterError
    naming the failed clause.
    """
    primes = tuple(int(p) for p in primes)
    exponents = tuple(int(m) for m in exponents)
    if not isinstance(ring, Integers):
        raise ParameterError(
            "prime coefficients are only supported over Z (fields have no primes)"
        )
    if len(exponents) < 2:
        raise ParameterError("need at least two exponents m1, m2")
    if len(primes) != len(exponents) - 1:
        raise ParameterError(
            f"need {len(exponents) - 1} primes for {len(exponents)} exponents, got {len(primes)}"
        )
    if len(set(exponents)) != len(exponents):
        raise ParameterError("exponents must be distinct")
    m1 = exponents[0]
    if not monoid.is_atom(m1):
        raise ParameterError(f"m1 = {m1} is not an atom of {monoid!r}")
    for m in exponents[1:]:
        if not monoid.contains(m):
            raise ParameterError(f"exponent {m} is not in {monoid!r}")
        if monoid.in_shifted(m, m1):
            raise ParameterError(f"exponent {m} lies in m1 + M (m1 = {m1})")
    for p in primes:
        if p < 2 or not is_prime(p):
            raise ParameterError(f"{p} is not a prime element of Z")

    terms = {m1: ring.element(-1)}
    # the last prime gets the positive sign on X^mr, all earlier ones negative
    for i, m in enumerate(exponents[1:], start=1):
        p = primes[i - 1]
        sign = 1 if i == len(exponents) - 1 else -1
        terms[m] = ring.element(sign * p)
    element = MonoidElement(ring, monoid, terms)
    return IrreducibleCertificate(element, m1, exponents[1:], primes)


# ---------------------------------------------------------------------------
# brute-force irreducibility oracle


def is_irreducible_by_search(
    f: MonoidElement, exponent_bound: int, coeff_bound: Optional[int] = None
) -> bool:
    """True when no factorization f = g*h with both factors nonunits exists.

    The search enumerates candidate divisors g with exponents drawn from
    the monoid members up to exponent_bound and coefficients from the
    bounded box ([-coeff_bound, coeff_bound] over Z, the whole ring over
    a finite field); each cofactor is recovered by exact division, so it
    is not box-limited. Only domains are supported.
    """
    ring = f.ring
    if not ring.is_domain():
        raise ParameterError(f"search requires a domain, not {ring.name()}")
    if f.is_zero():
        raise ParameterError("irreducibility is undefined for zero")
    if f.is_unit():
        raise ParameterError("irreducibility is undefined for units")
    if f.max_exponent() > exponent_bound:
        raise CeilingError(
            f"element exponent {f.max_exponent()} exceeds bound {exponent_bound}"
        )
    over_z = isinstance(ring, Integers)
    if over_z and (coeff_bound is None or coeff_bound < 1):
        raise ParameterError("a positive coeff_bound is required over Z")
    if not over_z and ring.size() is None:
        raise ParameterError(f"{ring.name()} is not finite")

    monoid = f.monoid
    dense = _to_dense(f)
    deg = len(dense) - 1

    # constant factor: over Z a nonunit constant divides f iff the content
    # is nontrivial; over a field constants are units
    if over_z:
        content = 0
        for c in dense:
            content = gcd(content, c)
        if deg == 0:
            return is_prime(abs(dense[0]))
        if content > 1:
            return False
    if deg == 0:
        return False  # field constant would be a unit; unreachable

    members = monoid.members_upto(min(deg, exponent_bound))
    for dg in members:
        dh = deg - dg
        if dg < 1 or dh < 1:
            continue
        if not monoid.contains(dh):
            continue
        if _split_search(dense, monoid, dg, coeff_bound, ring, over_z):
            return False
    return True


def _to_dense(f: MonoidElement) -> list:
    deg = f.max_exponent()
    if isinstance(f.ring, Integers):
        dense = [0] * (deg + 1)
        for e, c in f.terms:
            dense[e] = c.value
    else:
        dense = [f.ring.zero()] * (deg + 1)
        for e, c in f.terms:
            dense[e] = c
    return dense


def _split_search(dense, monoid, dg, coeff_bound, ring, over_z) -> bool:
    """Try every candidate divisor of degree dg; True when a split is found."""
    support = monoid.members_upto(dg)
    inner = support[:-1]  # dg itself is a member, handled by the lead loop
    if over_z:
        lead_choices = [s * d for d in divisors(abs(dense[-1])) for s in (1, -1)]
        box = list(range(-coeff_bound, coeff_bound + 1))
        # over a domain the lowest coefficients multiply, so a nonzero
        # constant term of the divisor must divide the lowest coefficient of f
        tc_f = next(c for c in dense if c)
        box0 = [0] + [
            s * d
            for d in divisors(abs(tc_f))
            for s in (1, -1)
            if d <= coeff_bound
        ]
        boxes = [box0 if pos == 0 else box for pos in inner]
    else:
        lead_choices = [e for e in ring.elements() if not e.is_zero()]
        boxes = [list(ring.elements()) for _ in inner]

    def assign(idx, g):
        if idx == len(inner):
            for lead in lead_choices:
                g[dg] = lead
                h = _exact_division(dense, g, ring, over_z)
                if h is not None and _supported(h, monoid, ring, over_z):
                    return True
            g[dg] = 0 if over_z else ring.zero()
            return False
        pos = inner[idx]
        for c in boxes[idx]:
            g[pos] = c
            if assign(idx + 1, g):
                return True
        g[pos] = 0 if over_z else ring.zero()
        return False

    g0 = [0] * (dg + 1) if over_z else [ring.zero()] * (dg + 1)
    return assign(0, g0)


def _exact_division(f_dense, g_dense, ring, over_z):
    """f / g when the division is exact in the ring, else None."""
    if over_z:
        rem = list(f_dense)
        glead = g_dense[-1]
        dh = len(rem) - len(g_dense)
        q = [0] * (dh + 1)
        for shift in range(dh, -1, -1):
            top = rem[shift + len(g_dense) - 1]
            if top % glead != 0:
                return None
            c = top // glead
            q[shift] = c
            if c:
                for i, gi in enumerate(g_dense):
                    rem[shift + i] -= c * gi
        return q if not any(rem) else None
    rem = list(f_dense)
    glead_inv = g_dense[-1].inverse()
    dh = len(rem) - len(g_dense)
    q = [ring.zero()] * (dh + 1)
    for shift in range(dh, -1, -1):
        c = rem[shift + len(g_dense) - 1] * glead_inv
        q[shift] = c
        if not c.is_zero():
            for i, gi in enumerate(g_dense):
                rem[shift + i] = rem[shift + i] - c * gi
    return q if all(x.is_zero() for x in rem) else None


def _supported(h_dense, monoid, ring, over_z) -> bool:
    for e, c in enumerate(h_dense):
        nonzero = c != 0 if over_z else not c.is_zero()
        if nonzero and not monoid.contains(e):
            return False
    return True
