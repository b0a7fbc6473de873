"""Small integer helpers: prime factors and π-parts."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == (n,)


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def pi_part(n: int, pred: Callable[[int], bool]) -> int:
    """Largest divisor of ``n`` whose prime divisors all satisfy ``pred``."""
    out = 1
    for p in prime_factors(n):
        if pred(p):
            out *= p_part(n, p)
    return out


def is_pi_number(n: int, pred: Callable[[int], bool]) -> bool:
    return all(pred(p) for p in prime_factors(n))


def is_squarefree(n: int) -> bool:
    return all(n % (p * p) for p in prime_factors(n))
