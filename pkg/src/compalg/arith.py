"""Integer helpers: primality, factoring, primitive roots.

Primality is deterministic for everything below 2**64 (fixed Miller-Rabin
witness set); larger inputs are rejected so key generation stays
reproducible rather than probabilistic.
"""

from __future__ import annotations

from .errors import ParameterError

# Witnesses proving Miller-Rabin deterministic for n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_PRIMALITY_LIMIT = 1 << 64


def is_prime(n: int) -> bool:
    """Deterministic primality check for 0 <= n < 2**64."""
    if n >= _PRIMALITY_LIMIT:
        raise ParameterError(f"primality check limited to n < 2**64, got {n}")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division, {prime: exponent}."""
    if n < 1:
        raise ParameterError(f"factorize expects n >= 1, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def radical(n: int) -> int:
    """Product of the distinct primes dividing n."""
    r = 1
    for p in factorize(n):
        r *= p
    return r


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def is_primitive_root(g: int, p: int) -> bool:
    """True when g generates the multiplicative group mod prime p."""
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    g %= p
    if g == 0:
        return False
    for q in factorize(p - 1):
        if pow(g, (p - 1) // q, p) == 1:
            return False
    return True


def smallest_primitive_root(p: int) -> int:
    for g in range(2, p):
        if is_primitive_root(g, p):
            return g
    if p == 2:
        return 1
    raise ParameterError(f"no primitive root found mod {p}")
