"""Small exact integer helpers."""

from __future__ import annotations

from functools import reduce
from math import gcd, isqrt


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def lcm_all(values) -> int:
    return reduce(lcm, values, 1)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
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


def smallest_prime_factor(n: int) -> int | None:
    if n < 2:
        return None
    return min(factorize(n))


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def exact_log(n: int, p: int) -> int:
    """k with p**k == n; raises ValueError if n is not a power of p."""
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    if n != 1:
        raise ValueError("not a power of p")
    return k
