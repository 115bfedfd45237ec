import logging
from math import isqrt
from typing import Iterator

from sympy import isprime, primerange

logger = logging.getLogger(__name__)

TRIAL_DIVISION_LIMIT = 10**6


def primes_between(low: int, high: int) -> Iterator[int]:
    """Primes p with low < p <= high, ascending."""
    return iter(primerange(low + 1, high + 1))


def factor_by_trial_division(n: int, limit: int = TRIAL_DIVISION_LIMIT) -> tuple[list[int], int]:
    """Distinct prime factors of n found by trial division, plus the leftover cofactor.

    Divisors are tried up to min(sqrt(n), limit). A leftover below limit^2 or
    passing the sympy primality test is returned as a prime factor, so the
    cofactor is either 1 or a composite whose prime factors all exceed limit.
    """
    if n < 1:
        raise ValueError("factorization needs a positive integer")
    primes: list[int] = []
    rest = n
    bound = min(isqrt(n), limit)
    for p in primerange(2, bound + 1):
        if p * p > rest:
            break
        if rest % p == 0:
            primes.append(p)
            while rest % p == 0:
                rest //= p
    if rest > 1 and (rest <= bound * bound or rest < (limit + 1) ** 2 or isprime(rest)):
        primes.append(rest)
        rest = 1
    if rest > 1:
        logger.warning(f"Composite cofactor with {rest.bit_length()} bits left unfactored above {limit}")
    return primes, rest
