import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Sequence

from ..utils.primes import TRIAL_DIVISION_LIMIT, factor_by_trial_division
from .dyadic import Dyadic

logger = logging.getLogger(__name__)

C0 = Fraction(2826, 1000)
A = Fraction(6076, 1000)
PRIME_RANGE_LIMIT = 2**62
DEFAULT_FRAC_BITS = 32


@dataclass(frozen=True)
class BoundsReport:
    delta: int
    delta_cubed_up: Dyadic
    B: Dyadic
    M: int
    N: int
    sigma: int
    C0: Fraction = field(default=C0)
    A: Fraction = field(default=A)

    @property
    def prime_range_exceeded(self) -> bool:
        return self.sigma >= PRIME_RANGE_LIMIT


def _prime_weight_cubed(p: int, frac_bits: int) -> Dyadic:
    """Upper bound on p^(3/(p-1))."""
    return Dyadic.root_up(Fraction(p**3), p - 1, frac_bits)


def delta_cubed_upper(
    delta: int,
    frac_bits: int = DEFAULT_FRAC_BITS,
    primes: Sequence[int] | None = None,
    cofactor: int = 1,
) -> Dyadic:
    """Upper bound on delta(Delta)^3 = prod over p | Delta of p^(3/(p-1)).

    Known prime divisors may be passed in; otherwise they come from trial
    division. A composite cofactor whose prime factors all exceed the trial
    limit L contributes ((L+1)^(3/L))^k for its at most k such factors.
    """
    if delta < 1:
        raise ValueError("delta must be positive")
    if primes is None:
        primes, cofactor = factor_by_trial_division(delta)
    result = Dyadic.from_int(1)
    for p in sorted(set(primes)):
        result = result * _prime_weight_cubed(p, frac_bits)
    if cofactor > 1:
        base = TRIAL_DIVISION_LIMIT + 1
        k = 0
        power = base
        while power <= cofactor:
            k += 1
            power *= base
        # ln(base) < 0.7 * bits(base) and exp(t) <= 1/(1 - t) for 0 <= t < 1
        t = Fraction(3 * 7 * base.bit_length(), 10 * TRIAL_DIVISION_LIMIT)
        result = result * Dyadic.ceil_of((1 / (1 - t)) ** k, frac_bits)
        logger.info(f"delta bound uses {k} unfactored prime factors above {TRIAL_DIVISION_LIMIT}")
    return result


def effective_bounds(
    delta: int,
    B: Dyadic,
    frac_bits: int = DEFAULT_FRAC_BITS,
    delta_cubed: Dyadic | None = None,
) -> BoundsReport:
    """M, N and sigma from upper bounds on delta^3 and on the root radius B >= 1."""
    if delta < 1:
        raise ValueError("delta must be positive")
    if B < 1:
        raise ValueError("B must be at least 1")
    if delta_cubed is None:
        delta_cubed = delta_cubed_upper(delta, frac_bits)
    M = ceil(C0 * delta**3 * delta_cubed.to_fraction())
    N = ceil(A * B.to_fraction() * M)
    sigma = (2 * M + 1) * N + 2 * M
    report = BoundsReport(delta=delta, delta_cubed_up=delta_cubed, B=B, M=M, N=N, sigma=sigma)
    if report.prime_range_exceeded:
        logger.warning(f"sigma={sigma} is beyond the supported prime range 2^62")
    logger.debug(f"Bounds: delta={delta} M={M} N={N} sigma={sigma}")
    return report
