"""Small exact number-theory helpers (trial division scale)."""

from __future__ import annotations

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, exponent), ...) with p ascending."""
    assert n >= 1
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def primes():
    """Yield 2, 3, 5, 7, ... indefinitely."""
    n = 2
    while True:
        if is_prime(n):
            yield n
        n += 1


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)*.  For n = 1 the group is trivial and the order is 1."""
    if n == 1:
        return 1
    a %= n
    assert math.gcd(a, n) == 1, "order undefined unless gcd(a, n) = 1"
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def is_canonical_conductor(n: int) -> bool:
    """Conductor labels are unique: N >= 1 and N % 4 != 2 (K_{2m} = K_m for odd m)."""
    return n >= 1 and n % 4 != 2
