"""Coefficient rings with exact arithmetic.

Four descriptor kinds cover everything the rest of the package needs:
the integers Z, modular integers Z/n, prime fields Fp, and extension
fields F(p^k) presented as Fp[t] modulo a stored monic irreducible.
Descriptors and elements are immutable; arithmetic never mutates, so
values are safe to share freely.

Canonical element values are plain ints (Z, Z/n, Fp) or little-endian
int tuples of length k (extension fields).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterator, Union

from .arith import factorize, is_prime
from .errors import (
    EmbeddingError,
    NotAUnitError,
    ParameterError,
    RingMismatchError,
)

Value = Union[int, tuple]


# ---------------------------------------------------------------------------
# dense little-endian polynomial arithmetic over Fp, used internally by
# extension fields (kept separate from poly.py to avoid an import cycle)


def _fp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [x % p for x in a]
    _fp_trim(rem)
    q = [0] * max(0, len(rem) - len(b) + 1)
    inv_lead = pow(b[-1], -1, p)
    while len(rem) >= len(b):
        coef = rem[-1] * inv_lead % p
        shift = len(rem) - len(b)
        q[shift] = coef
        for i, bi in enumerate(b):
            rem[shift + i] = (rem[shift + i] - coef * bi) % p
        _fp_trim(rem)
    return _fp_trim(q), rem


def _fp_ext_gcd(a: list[int], b: list[int], p: int):
    """Extended Euclid over Fp[t]: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = list(a), list(b)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, r = _fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, _fp_trim([(x - y) % p for x, y in itertools.zip_longest(u0, _fp_mul(q, u1, p), fillvalue=0)])
        v0, v1 = v1, _fp_trim([(x - y) % p for x, y in itertools.zip_longest(v0, _fp_mul(q, v1, p), fillvalue=0)])
    return r0, u0, v0


def _fp_is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by every monic divisor of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            cand = list(tail) + [1]
            _, rem = _fp_divmod(m, cand, p)
            if not rem:
                return False
    return True


def _fp_text(coeffs, var: str = "t", descending: bool = True) -> str:
    """Render an Fp coefficient vector, e.g. ``t^2+t+1``."""
    terms = []
    idx = range(len(coeffs) - 1, -1, -1) if descending else range(len(coeffs))
    for i in idx:
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(var if c == 1 else f"{c}{var}")
        else:
            terms.append(f"{var}^{i}" if c == 1 else f"{c}{var}^{i}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# ring descriptors


class Ring:
    """Common interface for ring descriptors.

    Subclasses are frozen dataclasses, hence hashable and comparable;
    two descriptors are the same ring exactly when they are equal.
    """

    is_field = False

    def element(self, value) -> "RingElement":
        return RingElement(self, self.canon(value))

    def zero(self) -> "RingElement":
        return self.element(0)

    def one(self) -> "RingElement":
        return self.element(1)

    # subclass hooks -------------------------------------------------
    def canon(self, value) -> Value:
        raise NotImplementedError

    def add_values(self, a: Value, b: Value) -> Value:
        raise NotImplementedError

    def mul_values(self, a: Value, b: Value) -> Value:
        raise NotImplementedError

    def neg_value(self, a: Value) -> Value:
        raise NotImplementedError

    def is_unit_value(self, a: Value) -> bool:
        raise NotImplementedError

    def inverse_value(self, a: Value) -> Value:
        raise NotImplementedError

    def is_nilpotent_value(self, a: Value) -> bool:
        raise NotImplementedError

    def size(self) -> int | None:
        """Number of elements, or None for infinite rings."""
        return None

    def is_domain(self) -> bool:
        raise NotImplementedError

    def elements(self) -> Iterator["RingElement"]:
        """All elements in canonical ascending order (finite rings only)."""
        raise ParameterError(f"{self.name()} is not finite")

    def name(self) -> str:
        raise NotImplementedError

    def value_text(self, a: Value) -> str:
        return str(a)

    def value_sort_key(self, a: Value) -> int:
        """Total order on canonical values, used for deterministic output."""
        raise NotImplementedError

    def __repr__(self):  # pragma: no cover - debug aid
        return self.name()


@dataclass(frozen=True, repr=False)
class Integers(Ring):
    """The ring of integers with arbitrary precision."""

    def canon(self, value):
        return int(value)

    def add_values(self, a, b):
        return a + b

    def mul_values(self, a, b):
        return a * b

    def neg_value(self, a):
        return -a

    def is_unit_value(self, a):
        return a in (1, -1)

    def inverse_value(self, a):
        if a not in (1, -1):
            raise NotAUnitError(f"{a} is not a unit of Z")
        return a

    def is_nilpotent_value(self, a):
        return a == 0

    def is_domain(self):
        return True

    def name(self):
        return "Z"

    def value_sort_key(self, a):
        return a


@dataclass(frozen=True, repr=False)
class IntegersMod(Ring):
    """Z/n for n >= 2; carries zero divisors and nilpotents when n is not squarefree."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError(f"Z/n requires n >= 2, got {self.n}")

    def canon(self, value):
        return int(value) % self.n

    def add_values(self, a, b):
        return (a + b) % self.n

    def mul_values(self, a, b):
        return (a * b) % self.n

    def neg_value(self, a):
        return (-a) % self.n

    def is_unit_value(self, a):
        return gcd(a, self.n) == 1

    def inverse_value(self, a):
        if gcd(a, self.n) != 1:
            raise NotAUnitError(f"{a} is not a unit of {self.name()}")
        return pow(a, -1, self.n)

    def is_nilpotent_value(self, a):
        # nilpotent iff every prime of n divides a
        return all(a % p == 0 for p in _prime_factors_cached(self.n))

    def size(self):
        return self.n

    def is_domain(self):
        return is_prime(self.n)

    def elements(self):
        for v in range(self.n):
            yield RingElement(self, v)

    def name(self):
        return f"Z/{self.n}"

    def value_sort_key(self, a):
        return a


@lru_cache(maxsize=None)
def _prime_factors_cached(n: int) -> tuple[int, ...]:
    return tuple(factorize(n))


@dataclass(frozen=True, repr=False)
class PrimeField(Ring):
    """Fp for prime p."""

    p: int
    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"F{self.p}: {self.p} is not prime")

    def canon(self, value):
        return int(value) % self.p

    def add_values(self, a, b):
        return (a + b) % self.p

    def mul_values(self, a, b):
        return (a * b) % self.p

    def neg_value(self, a):
        return (-a) % self.p

    def is_unit_value(self, a):
        return a != 0

    def inverse_value(self, a):
        if a == 0:
            raise NotAUnitError(f"0 is not a unit of {self.name()}")
        return pow(a, -1, self.p)

    def is_nilpotent_value(self, a):
        return a == 0

    def size(self):
        return self.p

    def is_domain(self):
        return True

    def elements(self):
        for v in range(self.p):
            yield RingElement(self, v)

    def name(self):
        return f"F{self.p}"

    def value_sort_key(self, a):
        return a


@dataclass(frozen=True, repr=False)
class ExtensionField(Ring):
    """F(p^k) = Fp[t]/(modulus), modulus monic irreducible of degree k >= 1.

    Values are little-endian int tuples of length k with entries in [0, p).
    Construction re-verifies irreducibility of the modulus by brute-force
    trial division, so an ExtensionField instance is a proof-carrying field.
    """

    p: int
    modulus: tuple[int, ...]  # little-endian, length k + 1, monic
    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"extension field base {self.p} is not prime")
        m = list(self.modulus)
        if len(m) < 2 or m[-1] != 1:
            raise ParameterError("modulus must be monic of degree >= 1")
        if any(not (0 <= c < self.p) for c in m):
            raise ParameterError("modulus coefficients must be canonical in [0, p)")
        if len(m) > 2 and not _fp_is_irreducible(m, self.p):
            raise ParameterError(
                f"modulus {_fp_text(m)} is reducible over F{self.p}"
            )

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def canon(self, value):
        k = self.degree
        if isinstance(value, int):
            vec = [value % self.p] + [0] * (k - 1)
            return tuple(vec)
        vec = [int(c) % self.p for c in value]
        if len(vec) > k:
            _, rem = _fp_divmod(vec, list(self.modulus), self.p)
            vec = rem
        vec += [0] * (k - len(vec))
        return tuple(vec[:k])

    def add_values(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul_values(self, a, b):
        prod = _fp_mul(list(a), list(b), self.p)
        _, rem = _fp_divmod(prod, list(self.modulus), self.p)
        return self.canon(tuple(rem))

    def neg_value(self, a):
        return tuple((-x) % self.p for x in a)

    def is_unit_value(self, a):
        return any(a)

    def inverse_value(self, a):
        if not any(a):
            raise NotAUnitError(f"0 is not a unit of {self.name()}")
        g, u, _ = _fp_ext_gcd(_fp_trim(list(a)), list(self.modulus), self.p)
        # g is a nonzero constant; scale u so that u*a == 1 mod modulus
        scale = pow(g[0], -1, self.p)
        return self.canon(tuple(c * scale % self.p for c in u))

    def is_nilpotent_value(self, a):
        return not any(a)

    def size(self):
        return self.p ** self.degree

    def is_domain(self):
        return True

    def elements(self):
        # ascending by base-p value, constant coefficient least significant
        for n in range(self.size()):
            yield RingElement(self, self._vector_of(n))

    def _vector_of(self, n: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.degree):
            digits.append(n % self.p)
            n //= self.p
        return tuple(digits)

    def name(self):
        return f"F({self.size()})=F{self.p}[t]/({_fp_text(self.modulus)})"

    def value_text(self, a):
        return _fp_text(a, descending=False)

    def value_sort_key(self, a):
        return sum(c * self.p ** i for i, c in enumerate(a))


@lru_cache(maxsize=None)
def default_extension_field(p: int, k: int) -> ExtensionField:
    """F(p^k) with the canonically smallest monic irreducible modulus.

    Candidates are enumerated ascending by base-p value of the non-leading
    coefficients, so the choice is deterministic, e.g. F(4) uses t^2+t+1.
    """
    for n in range(p ** k):
        tail, v = [], n
        for _ in range(k):
            tail.append(v % p)
            v //= p
        m = tail + [1]
        if _fp_is_irreducible(m, p):
            return ExtensionField(p, tuple(m))
    raise ParameterError(f"no irreducible of degree {k} over F{p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class RingElement:
    """An immutable element of a ring descriptor, always in canonical form."""

    ring: Ring
    value: Value

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            raise RingMismatchError(f"expected RingElement, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring.name()} vs {other.ring.name()}"
            )

    def __add__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.add_values(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.mul_values(self.value, other.value))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg_value(self.value))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return self == self.ring.zero()

    def is_unit(self) -> bool:
        return self.ring.is_unit_value(self.value)

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring.inverse_value(self.value))

    def is_nilpotent(self) -> bool:
        return self.ring.is_nilpotent_value(self.value)

    def text(self) -> str:
        return self.ring.value_text(self.value)

    def sort_key(self) -> int:
        return self.ring.value_sort_key(self.value)

    def __repr__(self):
        return f"{self.ring.name()}:{self.text()}"


# ---------------------------------------------------------------------------
# subfield embeddings


@lru_cache(maxsize=None)
def _generator_image(sub: ExtensionField, sup: ExtensionField) -> tuple:
    """Image of sub's generator t in sup: the first root of sub.modulus."""
    for cand in sup.elements():
        acc = sup.zero()
        power = sup.one()
        for c in sub.modulus:
            acc = acc + power * sup.element(c)
            power = power * cand
        if acc.is_zero():
            return cand.value
    raise EmbeddingError(
        f"{sub.name()} has no root of its modulus inside {sup.name()}"
    )  # pragma: no cover - guarded by the degree check


def has_embedding(sub: Ring, sup: Ring) -> bool:
    if sub == sup:
        return True
    if isinstance(sub, PrimeField) and isinstance(sup, ExtensionField):
        return sub.p == sup.p
    if isinstance(sub, ExtensionField) and isinstance(sup, ExtensionField):
        return sub.p == sup.p and sup.degree % sub.degree == 0
    return False


def embed(x: RingElement, target: Ring) -> RingElement:
    """Map x along the declared embedding of its ring into target.

    Declared embeddings: identity, Fp into F(p^k) (constants), and
    F(p^j) into F(p^k) for j | k via the stored image of the generator.
    """
    src = x.ring
    if src == target:
        return x
    if isinstance(src, PrimeField) and isinstance(target, ExtensionField):
        if src.p != target.p:
            raise EmbeddingError(f"no embedding {src.name()} -> {target.name()}")
        return target.element(x.value)
    if isinstance(src, ExtensionField) and isinstance(target, ExtensionField):
        if src.p != target.p or target.degree % src.degree != 0:
            raise EmbeddingError(f"no embedding {src.name()} -> {target.name()}")
        beta = target.element(_generator_image(src, target))
        acc = target.zero()
        power = target.one()
        for c in x.value:
            acc = acc + power * target.element(c)
            power = power * beta
        return acc
    raise EmbeddingError(f"no embedding {src.name()} -> {target.name()}")
