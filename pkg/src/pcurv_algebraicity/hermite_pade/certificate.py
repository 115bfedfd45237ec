"""Exact check of explicit Hermite-Pade approximants to (1 - z)^(k alpha).

Put lambda_i = (i - 1) alpha for i = 1..2M+1 and sigma = (2M + 1)N + 2M. The
sigma + 1 points lambda_i + k, 0 <= k <= N, have partial-fraction weights

    c_ik = 1 / prod_{(j, l) != (i, k)} (lambda_i + k - lambda_j - l)

and every power sum sum_ik c_ik (lambda_i + k)^r vanishes for r < sigma and
equals 1 at r = sigma. Hence sum_ik c_ik t^(lambda_i + k) has a zero of exact
order sigma at t = 1 with leading coefficient 1/sigma!. Substituting t = 1 - z
and scaling by (-1)^sigma N!^(2M+1) gives

    sum_{i=1}^{2M+1} P_i(z) (1 - z)^((i-1) alpha) = N!^(2M+1) / sigma! z^sigma + O(z^(sigma+1))

with P_i(z) = sum_h p_ih z^h of degree N. The coefficients below z^sigma are
checked to vanish identically in Q(alpha).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import comb, factorial

from ..arith.polynomials import RatPoly, add, degree, divmod_q, evaluate, monic, mul, poly_gcd_q, scale
from ..errors import IdentityViolationError
from ..utils.workers import parallel_map
from .alpha import AlphaRat, binom_alpha, binom_poly

logger = logging.getLogger(__name__)

MAX_SIGMA = 40

Table = tuple[tuple[AlphaRat, ...], ...]


@dataclass(frozen=True)
class HPCertificate:
    M: int
    N: int
    sigma: int
    approximants: Table
    lead: Fraction


def sigma_of(M: int, N: int) -> int:
    return (2 * M + 1) * N + 2 * M


def expected_lead(M: int, N: int) -> Fraction:
    return Fraction(factorial(N) ** (2 * M + 1), factorial(sigma_of(M, N)))


def _check_sizes(M: int, N: int) -> None:
    if M < 1 or N < 1:
        raise ValueError(f"M and N must be positive, got M={M}, N={N}")


def _weight(i: int, k: int, M: int, N: int) -> AlphaRat:
    """N!^(2M+1) c_ik = (-1)^(N-k) binom(N, k) / prod_{j != i} (N + 1) binom((i - j) alpha + k, N + 1)."""
    den: RatPoly = (Fraction(1),)
    for j in range(1, 2 * M + 2):
        if j != i:
            den = mul(den, scale(binom_poly(i - j, k, N + 1), N + 1))
    return AlphaRat.make((Fraction((-1) ** (N - k) * comb(N, k)),), den)


def hp_coefficients(M: int, N: int) -> Table:
    """Rows i = 1..2M+1 of p_ih for h = 0..N."""
    _check_sizes(M, N)
    sign = (-1) ** sigma_of(M, N)
    rows = []
    for i in range(1, 2 * M + 2):
        weights = [_weight(i, k, M, N) for k in range(N + 1)]
        row = []
        for h in range(N + 1):
            # (1 - z)^k contributes binom(k, h) (-1)^h to z^h
            p = AlphaRat.constant(0)
            for k in range(h, N + 1):
                p = p + weights[k].scaled(comb(k, h))
            row.append(p.scaled(sign * (-1) ** h))
        rows.append(tuple(row))
    return tuple(rows)


def _lcm(f: RatPoly, g: RatPoly) -> RatPoly:
    return monic(divmod_q(mul(f, g), poly_gcd_q(f, g))[0])


def _series_numerators(indexed_row: tuple[int, tuple[AlphaRat, ...]], L: RatPoly, sigma: int) -> list[RatPoly]:
    """Coefficients 0..sigma of L * P_i(z) (1 - z)^((i-1) alpha), as polynomials in alpha."""
    i, row = indexed_row
    weighted = [mul(p.num, divmod_q(L, p.den)[0]) for p in row]
    out = []
    for m in range(sigma + 1):
        acc: RatPoly = ()
        for h, w in enumerate(weighted):
            if h > m:
                break
            term = mul(w, binom_poly(i - 1, 0, m - h))
            acc = add(acc, term if (m - h) % 2 == 0 else scale(term, -1))
        out.append(acc)
    return out


def _direct_lead(table: Table, sigma: int) -> AlphaRat:
    total = AlphaRat.constant(0)
    for i, row in enumerate(table, start=1):
        for h, p in enumerate(row):
            total = total + (p * binom_alpha(i - 1, 0, sigma - h)).scaled((-1) ** (sigma - h))
    return total


def hp_verify(M: int, N: int, n_jobs: int = 1) -> HPCertificate:
    _check_sizes(M, N)
    sigma = sigma_of(M, N)
    if sigma > MAX_SIGMA:
        raise ValueError(f"sigma={sigma} exceeds the symbolic limit {MAX_SIGMA}")
    table = hp_coefficients(M, N)
    lead = expected_lead(M, N)

    # denominators only carry the linear factors (i - j) alpha + e with |e| <= N
    den_bound = 2 * M * (2 * N + 1)
    L: RatPoly = (Fraction(1),)
    for row in table:
        for p in row:
            if degree(p.den) > den_bound:
                raise IdentityViolationError(f"denominator of degree {degree(p.den)} > {den_bound}")
            L = _lcm(L, p.den)
    logger.info(f"Verifying M={M} N={N} sigma={sigma}, common denominator of degree {degree(L)}")

    series = parallel_map(partial(_series_numerators, L=L, sigma=sigma), enumerate(table, start=1), n_jobs=n_jobs)
    bound = degree(L) + sigma
    for m in range(sigma + 1):
        coeff: RatPoly = ()
        for s in series:
            coeff = add(coeff, s[m])
        if degree(coeff) > bound:
            raise IdentityViolationError(f"coefficient of z^{m} has degree {degree(coeff)} > {bound}")
        if m < sigma and coeff:
            raise IdentityViolationError(f"coefficient of z^{m} does not vanish")
        if m == sigma and coeff != scale(L, lead):
            raise IdentityViolationError(f"coefficient of z^{sigma} differs from {lead}")

    if _direct_lead(table, sigma) != AlphaRat.constant(lead):
        raise IdentityViolationError("direct evaluation of the leading coefficient disagrees")
    return HPCertificate(M=M, N=N, sigma=sigma, approximants=table, lead=lead)


def hp_check_at(M: int, N: int, alpha: Fraction) -> Fraction:
    """Specialize alpha to a rational and check the identity numerically; returns the z^sigma coefficient.

    Raises ZeroDenominatorError when some p_ih has a pole at alpha.
    """
    sigma = sigma_of(M, N)
    values = [[p.at(alpha) for p in row] for row in hp_coefficients(M, N)]
    for m in range(sigma + 1):
        coeff = Fraction(0)
        for i, row in enumerate(values, start=1):
            for h, v in enumerate(row[: m + 1]):
                coeff += v * (-1) ** (m - h) * evaluate(binom_poly(i - 1, 0, m - h), alpha)
        if m < sigma and coeff:
            raise IdentityViolationError(f"coefficient of z^{m} is {coeff} at alpha={alpha}")
    if coeff != expected_lead(M, N):
        raise IdentityViolationError(f"coefficient of z^{sigma} is {coeff} at alpha={alpha}")
    return coeff
