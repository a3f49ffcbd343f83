"""
Integer Arithmetic Helpers

Factorisation-based helpers for principal-ideal arithmetic in Z. All ideal
generators are non-negative; 0 stands for the zero ideal, 1 for Z itself.
"""

from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, List

from sympy import divisors, factorint, isprime, primefactors


def factorization(n: int) -> Dict[int, int]:
    """Prime factorisation of |n| as {prime: exponent}; empty for 0 and ±1."""
    n = abs(n)
    if n <= 1:
        return {}
    return {int(p): int(e) for p, e in factorint(n).items()}


def prime_factors(n: int) -> List[int]:
    n = abs(n)
    if n <= 1:
        return []
    return [int(p) for p in primefactors(n)]


def squarefree_kernel(n: int) -> int:
    """rad(n) for n != 0; rad(0) = 0."""
    if n == 0:
        return 0
    return reduce(lambda acc, p: acc * p, prime_factors(n), 1)


def split_by_primes(n: int, primes: Iterable[int]) -> tuple[int, int]:
    """Split n = u * v where u collects the prime powers of n over ``primes``."""
    wanted = set(primes)
    u = 1
    for p, e in factorization(n).items():
        if p in wanted:
            u *= p ** e
    return u, abs(n) // u


def prime_part(n: int, p: int) -> int:
    """Largest power of p dividing n (n != 0)."""
    power = 1
    n = abs(n)
    while n % p == 0:
        n //= p
        power *= p
    return power


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(prime_factors(n)) == 1


def is_prime(p: int) -> bool:
    return bool(isprime(p))


def positive_divisors(n: int) -> List[int]:
    return [int(d) for d in divisors(abs(n))]


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, (abs(v) for v in values), 0)


def lcm_all(values: Iterable[int]) -> int:
    values = list(values)
    if any(v == 0 for v in values):
        return 0
    return reduce(lcm, (abs(v) for v in values), 1)
