"""Tower-constrained polynomial subrings and their factorization theory.

A Tower A0 < A1 < ... < A(n-1) < B carves out the subring of B[X] whose
coefficient of X^i must lie in (the embedded image of) A_i for i < n,
with free B coefficients from degree n upward. Membership is enforced
at construction, so a CompositeElement is closed by type and every
arithmetic result is re-checked cheaply.

For a single-level field tower the irreducibility criterion is:
irreducible in B[X] with constant term in A0. For two or more levels
that criterion is only sound in one direction (irreducible in B[X]
implies irreducible here); the converse fails, e.g. t*X^2 over
F2 < F2 < F4 has no factorization with level-respecting coefficients
although it splits as (tX)(X) in B[X]. Where the criterion is silent
the operations fall back to an exhaustive bounded divisor search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import CeilingError, MembershipError, ParameterError
from .poly import Polynomial
from .rings import Ring, RingElement, embed, has_embedding

#: size ceilings for the exhaustive searches (oracle, chains, deep towers)
SEARCH_MAX_FIELD_SIZE = 9
SEARCH_MAX_DEGREE = 4


class Tower:
    """Descriptor for A0 < ... < A(n-1) < B with declared embeddings."""

    __slots__ = ("levels", "top", "_images", "_reverse")

    def __init__(self, levels, top: Ring):
        levels = tuple(levels)
        if not levels:
            raise ParameterError("a tower needs at least one level")
        for lo, hi in zip(levels, levels[1:] + (top,)):
            if not has_embedding(lo, hi):
                raise ParameterError(
                    f"no declared embedding {lo.name()} -> {hi.name()}"
                )
        for lvl in levels:
            if not has_embedding(lvl, top):
                raise ParameterError(
                    f"no declared embedding {lvl.name()} -> {top.name()}"
                )
            if lvl != top and lvl.size() is None:
                raise ParameterError(
                    f"infinite proper level {lvl.name()} is not supported"
                )
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "_images", {})
        object.__setattr__(self, "_reverse", {})

    def __setattr__(self, *_):
        raise AttributeError("Tower is immutable")

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def fields_mode(self) -> bool:
        return all(r.is_field for r in self.levels) and self.top.is_field

    def __eq__(self, other):
        return (
            isinstance(other, Tower)
            and self.levels == other.levels
            and self.top == other.top
        )

    def __hash__(self):
        return hash((self.levels, self.top))

    def __repr__(self):
        return "<".join(r.name() for r in self.levels + (self.top,))

    def _level_maps(self, i: int):
        if i not in self._reverse:
            fwd = {}
            for a in self.levels[i].elements():
                fwd[embed(a, self.top).value] = a
            self._reverse[i] = fwd
        return self._reverse[i]

    def level_contains(self, i: int, c: RingElement) -> bool:
        """Is the top-ring element c inside the embedded image of level i?"""
        if i >= self.depth or self.levels[i] == self.top:
            return True
        return c.value in self._level_maps(i)

    def unembed(self, i: int, c: RingElement) -> RingElement:
        """Preimage in A_i of a top-ring element known to lie in its image."""
        if self.levels[i] == self.top:
            return c
        try:
            return self._level_maps(i)[c.value]
        except KeyError:
            raise MembershipError(
                f"{c.text()} is not in the image of level {i} ({self.levels[i].name()})"
            ) from None

    def level_elements(self, i: int) -> list[RingElement]:
        """Embedded images of level i inside the top ring, ascending."""
        if i >= self.depth or self.levels[i] == self.top:
            return list(self.top.elements())
        elems = [embed(a, self.top) for a in self.levels[i].elements()]
        elems.sort(key=lambda e: e.sort_key())
        return elems


def contains(tower: Tower, f: Polynomial) -> bool:
    """Membership test: coefficient of X^i lies in level i for i < depth."""
    if f.ring != tower.top:
        return False
    return all(
        tower.level_contains(i, f.coeff(i)) for i in range(min(tower.depth, f.degree() + 1))
    )


class CompositeElement:
    """An element of the tower-constrained subring; membership checked at init."""

    __slots__ = ("tower", "poly")

    def __init__(self, tower: Tower, f: Polynomial):
        if f.ring != tower.top:
            raise MembershipError(
                f"polynomial over {f.ring.name()} does not live over {tower.top.name()}"
            )
        for i in range(min(tower.depth, f.degree() + 1)):
            if not tower.level_contains(i, f.coeff(i)):
                raise MembershipError(
                    f"coefficient of X^{i} ({f.coeff(i).text()}) is outside level "
                    f"{i} ({tower.levels[i].name()})"
                )
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "poly", f)

    def __setattr__(self, *_):
        raise AttributeError("CompositeElement is immutable")

    @classmethod
    def make(cls, tower: Tower, coeffs) -> "CompositeElement":
        return cls(tower, Polynomial(tower.top, coeffs))

    def degree(self) -> int:
        return self.poly.degree()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, CompositeElement)
            and self.tower == other.tower
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.tower, self.poly))

    def __repr__(self):
        return f"{self.tower!r}:[{','.join(c.text() for c in self.poly.coeffs)}]"

    def _wrap(self, f: Polynomial) -> "CompositeElement":
        return CompositeElement(self.tower, f)

    def __add__(self, other):
        self._check(other)
        return self._wrap(self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return self._wrap(self.poly - other.poly)

    def __mul__(self, other):
        self._check(other)
        return self._wrap(self.poly * other.poly)

    def __neg__(self):
        return self._wrap(-self.poly)

    def _check(self, other):
        if not isinstance(other, CompositeElement) or other.tower != self.tower:
            raise MembershipError("tower mismatch")

    # predicates -------------------------------------------------------
    def is_unit(self) -> bool:
        """Constant term a unit of A0 and all higher coefficients nilpotent.

        Over a field tower this reduces to: a nonzero constant of A0.
        """
        if self.is_zero():
            return False
        c0 = self.tower.unembed(0, self.poly.coeff(0))
        if not c0.is_unit():
            return False
        return all(c.is_nilpotent() for c in self.poly.coeffs[1:])

    def quotient_eval(self) -> RingElement:
        """Evaluation at X = 0, landing in A0; a surjective ring map."""
        return self.tower.unembed(0, self.poly.constant())

    def is_irreducible(self) -> bool:
        """True when the element admits no factorization into two nonunits.

        Single-level tower: equivalent to irreducibility in B[X] (the
        constant term lies in A0 by construction). Deeper towers: B[X]
        irreducibility is still sufficient; otherwise an exhaustive
        bounded divisor search decides, since reducibility in B[X] does
        not force level-respecting factors.
        """
        self._require_fields("is_irreducible")
        if self.is_zero() or self.is_unit():
            raise ParameterError("irreducibility is undefined for zero and units")
        if self.tower.depth == 1:
            return self.poly.is_irreducible()
        if self.poly.is_irreducible():
            return True
        _check_search_ceiling(self)
        return _find_factorization(self) is None

    def _require_fields(self, opname: str):
        if not self.tower.fields_mode:
            raise ParameterError(f"{opname} requires a tower of fields")


# ---------------------------------------------------------------------------
# exhaustive searches


def _check_search_ceiling(f: CompositeElement):
    size = f.tower.top.size()
    if size is None or size > SEARCH_MAX_FIELD_SIZE:
        raise CeilingError(
            f"top field size exceeds search ceiling {SEARCH_MAX_FIELD_SIZE}"
        )
    if f.degree() > SEARCH_MAX_DEGREE:
        raise CeilingError(
            f"degree {f.degree()} exceeds search ceiling {SEARCH_MAX_DEGREE}"
        )


def _divisor_candidates(tower: Tower, degree: int) -> Iterator[Polynomial]:
    """All level-respecting polynomials of exactly the given degree."""
    per_index = []
    for i in range(degree + 1):
        cands = tower.level_elements(i)
        if i == degree:
            cands = [c for c in cands if not c.is_zero()]
        per_index.append(cands)
    stack = [[]]
    for cands in per_index:
        stack = [pre + [c] for pre in stack for c in cands]
    for coeffs in stack:
        yield Polynomial(tower.top, coeffs)


def _find_factorization(
    f: CompositeElement,
) -> Optional[tuple[CompositeElement, CompositeElement]]:
    """Smallest-degree proper divisor g with level-respecting cofactor, or None."""
    tower = f.tower
    for d in range(1, f.degree()):
        for g in _divisor_candidates(tower, d):
            q, r = divmod(f.poly, g)
            if r.is_zero() and contains(tower, q):
                return CompositeElement(tower, g), CompositeElement(tower, q)
    return None


def has_nontrivial_factorization(f: CompositeElement) -> bool:
    """Exhaustive oracle: does f = g*h with both factors nonunits exist?

    Complete within the documented ceilings. Cofactors are obtained by
    exact division, so every factorization with at least one
    level-respecting divisor of each degree is covered; over a field
    tower that is all of them.
    """
    f._require_fields("factor search")
    if f.is_zero() or f.is_unit():
        raise ParameterError("factor search is undefined for zero and units")
    _check_search_ceiling(f)
    return _find_factorization(f) is not None


def atomize(f: CompositeElement) -> list[CompositeElement]:
    """Factor into irreducibles; the product of the result equals f.

    Monomial-shaped atoms a*X come first, then atoms whose constant term
    is a unit of A0. For a single-level tower the construction peels the
    X^r part into r linear atoms and normalizes each B[X] factor of the
    remaining part to constant term 1; the first atom absorbs the spare
    constant so membership holds throughout. Deeper towers fall back to
    recursive exhaustive splitting within the search ceilings.
    """
    f._require_fields("atomize")
    if f.is_zero() or f.is_unit():
        raise ParameterError("atomize is undefined for zero and units")
    tower = f.tower
    if tower.depth > 1:
        _check_search_ceiling(f)
        return _atomize_by_search(f)

    top = tower.top
    r = 0
    while f.poly.coeff(r).is_zero():
        r += 1
    low = f.poly.coeff(r)
    body = Polynomial(top, f.poly.coeffs[r:])
    unit_part = body.scale(low.inverse())  # constant term 1

    atoms: list[CompositeElement] = []
    if r > 0:
        atoms.append(CompositeElement.make(tower, [top.zero(), low]))
        x_atom = CompositeElement.make(tower, [top.zero(), top.one()])
        atoms.extend([x_atom] * (r - 1))

    normalized: list[CompositeElement] = []
    if unit_part.degree() >= 1:
        for q, mult in unit_part.factor().factors:
            q1 = q.scale(q.constant().inverse())
            normalized.extend(CompositeElement(tower, q1) for _ in range(mult))
    if r == 0:
        # fold the leading constant of f into the first normalized factor
        normalized[0] = CompositeElement(tower, normalized[0].poly.scale(low))
    atoms.extend(normalized)
    return atoms


def _atomize_by_search(f: CompositeElement) -> list[CompositeElement]:
    split = _find_factorization(f)
    if split is None:
        return [f]
    g, h = split
    atoms = _atomize_by_search(g) + _atomize_by_search(h)
    atoms.sort(key=lambda a: (0 if a.poly.constant().is_zero() else 1, a.poly.sort_key()))
    return atoms


@dataclass(frozen=True)
class DivisorChain:
    """A chain f0, f1 | f0, f2 | f1, ... of proper divisions.

    ``terminated`` certifies that the last entry has no proper divisor
    (it is an atom); steps = len(elements) - 1.
    """

    elements: tuple[CompositeElement, ...]
    terminated: bool

    @property
    def steps(self) -> int:
        return len(self.elements) - 1


def divisor_chain(f: CompositeElement, max_steps: int) -> DivisorChain:
    """Follow cofactors of smallest-degree divisors until an atom or the cap.

    Each step strictly drops the degree, which is the empirical witness
    for the ascending chain condition on principal ideals at this scale.
    """
    f._require_fields("divisor chain")
    if f.is_zero() or f.is_unit():
        raise ParameterError("divisor chains are undefined for zero and units")
    _check_search_ceiling(f)
    chain = [f]
    current = f
    terminated = False
    while len(chain) - 1 < max_steps:
        split = _find_factorization(current)
        if split is None:
            terminated = True
            break
        _, cofactor = split
        chain.append(cofactor)
        current = cofactor
    else:
        terminated = _find_factorization(current) is None
    return DivisorChain(tuple(chain), terminated)
