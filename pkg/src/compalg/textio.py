"""Canonical text forms for rings, polynomials, towers, monoid elements
and ideals, as used by the CLI and key files.

Forms:
  rings       Z | Z/12 | F5 | F4 | F(4)=F2[t]/(t^2+t+1)
  elements    Z/12:6 | F4:1+t
  polynomials F5:[1,0,2]          (little-endian coefficients)
  towers      F2<F4 | F2<F2<F4
  composites  F2<F4:[1,t]
  monoids     M<2,3>
  monoid elts F5:M<2,3>:{2:1,3:4} (exponent:coefficient pairs)
  ideals      (15)

Short field names like F4 pick the deterministic default modulus;
explicit-modulus names round-trip losslessly.
"""

from __future__ import annotations

import re

from .arith import factorize
from .composite import CompositeElement, Tower
from .errors import FormatError
from .ideals import PrincipalIdeal
from .monoid_domain import MonoidElement, NumericalMonoid
from .poly import Polynomial
from .rings import (
    ExtensionField,
    Integers,
    IntegersMod,
    PrimeField,
    Ring,
    RingElement,
    default_extension_field,
)

_TERM_RE = re.compile(r"^(\d+)?(t(\^(\d+))?)?$")
_EXT_RE = re.compile(r"^F\((\d+)\)=F(\d+)\[t\]/\((.+)\)$")


def parse_ring(text: str) -> Ring:
    text = text.strip()
    if text == "Z":
        return Integers()
    if text.startswith("Z/"):
        try:
            return IntegersMod(int(text[2:]))
        except ValueError:
            raise FormatError(f"bad modulus in ring name {text!r}") from None
    m = _EXT_RE.match(text)
    if m:
        q, p = int(m.group(1)), int(m.group(2))
        coeffs = _parse_tpoly(m.group(3), p)
        field = ExtensionField(p, tuple(coeffs))
        if field.size() != q:
            raise FormatError(f"ring name {text!r}: size {q} does not match modulus")
        return field
    if text.startswith("F"):
        try:
            q = int(text[1:])
        except ValueError:
            raise FormatError(f"unrecognized ring name {text!r}") from None
        fac = factorize(q)
        if len(fac) != 1:
            raise FormatError(f"F{q}: {q} is not a prime power")
        (p, k), = fac.items()
        if k == 1:
            return PrimeField(p)
        return default_extension_field(p, k)
    raise FormatError(f"unrecognized ring name {text!r}")


def ring_name(ring: Ring) -> str:
    return ring.name()


def short_ring_name(ring: Ring) -> str:
    """F4 instead of the explicit-modulus form, when the modulus is the default."""
    if isinstance(ring, ExtensionField):
        if ring == default_extension_field(ring.p, ring.degree):
            return f"F{ring.size()}"
    return ring.name()


def _parse_tpoly(text: str, p: int) -> list[int]:
    """Parse a sum of terms like 2t^3, t, 5 into little-endian coefficients."""
    coeffs: dict[int, int] = {}
    for raw in text.split("+"):
        term = raw.strip()
        m = _TERM_RE.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise FormatError(f"bad term {term!r} in field element")
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            exp = 0
        elif m.group(4) is None:
            exp = 1
        else:
            exp = int(m.group(4))
        coeffs[exp] = (coeffs.get(exp, 0) + coeff) % p
    out = [0] * (max(coeffs) + 1 if coeffs else 1)
    for e, c in coeffs.items():
        out[e] = c
    return out


def parse_scalar(ring: Ring, text: str) -> RingElement:
    text = text.strip()
    if isinstance(ring, ExtensionField):
        return ring.element(tuple(_parse_tpoly(text, ring.p)))
    try:
        return ring.element(int(text))
    except ValueError:
        raise FormatError(f"bad element {text!r} for {ring.name()}") from None


def parse_element(text: str) -> RingElement:
    """RING:VALUE, e.g. Z/12:6 or F4:1+t."""
    ring_part, sep, value_part = text.partition(":")
    if not sep:
        raise FormatError(f"expected RING:VALUE, got {text!r}")
    return parse_scalar(parse_ring(ring_part), value_part)


def _split_bracket_list(body: str) -> list[str]:
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise FormatError(f"expected [...], got {body!r}")
    inner = body[1:-1].strip()
    return [] if not inner else [part.strip() for part in inner.split(",")]


def parse_poly(text: str) -> Polynomial:
    """RING:[c0,c1,...], little-endian."""
    ring_part, sep, body = text.partition(":")
    if not sep:
        raise FormatError(f"expected RING:[coeffs], got {text!r}")
    ring = parse_ring(ring_part)
    return Polynomial(ring, [parse_scalar(ring, c) for c in _split_bracket_list(body)])


def poly_body_text(f: Polynomial) -> str:
    return f"[{','.join(c.text() for c in f.coeffs)}]"


def poly_text(f: Polynomial) -> str:
    return f"{f.ring.name()}:{poly_body_text(f)}"


def parse_tower(text: str) -> Tower:
    names = [part.strip() for part in text.split("<")]
    if len(names) < 2:
        raise FormatError(f"a tower needs at least two rings, got {text!r}")
    rings = [parse_ring(n) for n in names]
    return Tower(rings[:-1], rings[-1])


def tower_text(tower: Tower) -> str:
    return "<".join(short_ring_name(r) for r in tower.levels + (tower.top,))


def parse_composite(text: str) -> CompositeElement:
    """TOWER:[coeffs], e.g. F2<F4:[1,t]."""
    tower_part, sep, body = text.partition(":")
    if not sep or "<" not in tower_part:
        raise FormatError(f"expected TOWER:[coeffs], got {text!r}")
    tower = parse_tower(tower_part)
    coeffs = [parse_scalar(tower.top, c) for c in _split_bracket_list(body)]
    return CompositeElement(tower, Polynomial(tower.top, coeffs))


def composite_text(e: CompositeElement) -> str:
    return f"{tower_text(e.tower)}:{poly_body_text(e.poly)}"


def parse_monoid(text: str) -> NumericalMonoid:
    text = text.strip()
    if not (text.startswith("M<") and text.endswith(">")):
        raise FormatError(f"expected M<gens>, got {text!r}")
    try:
        gens = [int(g) for g in text[2:-1].split(",")]
    except ValueError:
        raise FormatError(f"bad generators in {text!r}") from None
    return NumericalMonoid(gens)


def monoid_text(m: NumericalMonoid) -> str:
    return f"M<{','.join(str(g) for g in m.generators)}>"


def parse_monoid_element(text: str) -> MonoidElement:
    """RING:MONOID:{exp:coeff,...}, e.g. F5:M<2,3>:{2:1,3:4}."""
    ring_part, sep, rest = text.partition(":")
    if not sep:
        raise FormatError(f"expected RING:MONOID:{{terms}}, got {text!r}")
    ring = parse_ring(ring_part)
    monoid_part, sep, body = rest.partition(":")
    if not sep:
        raise FormatError(f"expected RING:MONOID:{{terms}}, got {text!r}")
    monoid = parse_monoid(monoid_part)
    body = body.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise FormatError(f"expected {{exp:coeff,...}}, got {body!r}")
    terms = []
    inner = body[1:-1].strip()
    if inner:
        for pair in inner.split(","):
            exp_part, sep, coeff_part = pair.partition(":")
            if not sep:
                raise FormatError(f"bad term {pair!r} in monoid element")
            try:
                exp = int(exp_part)
            except ValueError:
                raise FormatError(f"bad exponent {exp_part!r}") from None
            terms.append((exp, parse_scalar(ring, coeff_part)))
    return MonoidElement(ring, monoid, terms)


def monoid_element_text(e: MonoidElement) -> str:
    body = ",".join(f"{exp}:{c.text()}" for exp, c in e.terms)
    return f"{e.ring.name()}:{monoid_text(e.monoid)}:{{{body}}}"


def parse_ideal(text: str) -> PrincipalIdeal:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise FormatError(f"expected (n), got {text!r}")
    try:
        return PrincipalIdeal(int(text[1:-1]))
    except ValueError:
        raise FormatError(f"bad ideal generator in {text!r}") from None


def ideal_text(i: PrincipalIdeal) -> str:
    return repr(i)
