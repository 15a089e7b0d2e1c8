"""Arithmetic in Z_m: zero divisors, annihilators and annihilator classes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

MAX_MODULUS = 2**63 - 1


def check_modulus(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"modulus must be an int, got {type(m).__name__}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m > MAX_MODULUS:
        raise ValueError(f"modulus {m} exceeds 2**63 - 1")
    return m


@lru_cache(maxsize=256)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``m`` as ascending ``(prime, exponent)`` pairs."""
    check_modulus(m)
    factors = []
    rest = m
    for p in (2, 3, 5):
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e:
            factors.append((p, e))
    # wheel-free trial division is enough for the small moduli seen in practice
    p = 7
    while p * p <= rest and p < 10**5:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e:
            factors.append((p, e))
        p += 2
    if rest > 1:
        if p * p > rest:
            factors.append((rest, 1))
        else:
            from sympy import factorint

            factors.extend(sorted(factorint(rest).items()))
    return tuple(factors)


def divisors(m: int) -> list[int]:
    """All positive divisors of ``m`` in ascending order."""
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def prime_power(m: int) -> tuple[int, int] | None:
    """Return ``(p, n)`` if ``m == p**n`` for a prime ``p``, else ``None``."""
    f = factorize(m)
    if len(f) == 1:
        return f[0]
    return None


def totient(m: int) -> int:
    if m == 1:
        return 1
    result = m
    for p, _ in factorize(m):
        result -= result // p
    return result


def zero_divisors(m: int) -> list[int]:
    """Nonzero zero divisors of Z_m, ascending."""
    check_modulus(m)
    return [x for x in range(1, m) if math.gcd(x, m) > 1]


def annihilator(x: int, m: int) -> list[int]:
    """All ``y`` in Z_m with ``x*y = 0``: the multiples of ``m / gcd(x, m)``."""
    check_modulus(m)
    if not 0 <= x < m:
        raise ValueError(f"residue {x} not in [0, {m})")
    step = m // math.gcd(x, m)
    return list(range(0, m, step))


@dataclass(frozen=True)
class AnnClass:
    """Annihilator class of Z_m, keyed by the shared value ``gcd(x, m)``.

    The least positive member is the key itself, and the class has
    ``phi(m / key)`` members. Members are only listed on demand.
    """

    m: int
    key: int

    @property
    def representative(self) -> int:
        return self.key

    @property
    def size(self) -> int:
        return totient(self.m // self.key)

    def members(self) -> list[int]:
        q = self.m // self.key
        return [self.key * t for t in range(1, q) if math.gcd(t, q) == 1]

    def annihilator_step(self) -> int:
        return self.m // self.key


def ann_classes(m: int) -> list[AnnClass]:
    """Annihilator classes of the nonzero zero divisors, ascending by key."""
    check_modulus(m)
    return [AnnClass(m, d) for d in divisors(m) if 1 < d < m]


def class_of(x: int, m: int) -> AnnClass:
    check_modulus(m)
    d = math.gcd(x, m)
    if not 1 < d < m:
        raise ValueError(f"{x} is not a nonzero zero divisor mod {m}")
    return AnnClass(m, d)
