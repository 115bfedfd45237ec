"""Certified upper bounds on the largest root modulus of an integer polynomial.

The polynomial is first rescaled by a numerical estimate of its root radius so
that its largest root sits near the unit circle; Graeffe root squaring then
runs on integer interval coefficients that share a common binary scale, and a
Fujiwara-type bound on the final iterate is pulled back by repeated upward
square roots.
"""

import logging
import math
from fractions import Fraction
from typing import Sequence

import mpmath

from ..arith.polynomials import degree, squarefree_part_z, trim
from .dyadic import Dyadic

logger = logging.getLogger(__name__)

DEFAULT_REL_TOL = Fraction(1, 1024)
# roots below this modulus are not resolved
RADIUS_FLOOR = Dyadic(1, -20)
SCALE_BITS = 40
ROOT_FRAC_BITS = 64
MAX_PRECISION_RETRIES = 3

Interval = tuple[int, int]


def cauchy_bound(R: Sequence[int]) -> Fraction:
    """1 + max |r_i / r_n|."""
    R = trim(R)
    lc = abs(R[-1])
    return 1 + max((Fraction(abs(c), lc) for c in R[:-1]), default=Fraction(0))


def graeffe_steps(n: int, rel_tol: Fraction) -> int:
    """Least k with (n^2)^(1/2^k) <= 1 + rel_tol/2."""
    if n <= 1:
        return 0
    target = math.log1p(float(rel_tol) / 2)
    k = 0
    while 2 * math.log(n) / 2**k > target:
        k += 1
    return k


def _estimate_radius(R: tuple[int, ...]) -> float | None:
    try:
        with mpmath.workdps(30):
            roots = mpmath.polyroots(list(reversed(R)), maxsteps=200 + 20 * len(R), extraprec=60)
    except mpmath.mp.NoConvergence:
        return None
    return float(max(abs(z) for z in roots))


def _imul(x: Interval, y: Interval) -> Interval:
    products = (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return min(products), max(products)


def _isquare(x: Interval) -> Interval:
    lo, hi = x
    if lo <= 0 <= hi:
        return 0, max(lo * lo, hi * hi)
    return min(lo * lo, hi * hi), max(lo * lo, hi * hi)


def _shift_down(x: Interval, bits: int) -> Interval:
    if bits <= 0:
        return x
    return x[0] >> bits, -((-x[1]) >> bits)


def _rescale(coeffs: list[Interval], precision: int) -> list[Interval]:
    top = max(max(abs(lo), abs(hi)) for lo, hi in coeffs)
    excess = top.bit_length() - precision
    return [_shift_down(c, excess) for c in coeffs]


def _graeffe_step(coeffs: list[Interval]) -> list[Interval]:
    n = len(coeffs) - 1
    out = []
    for m in range(n + 1):
        acc = _isquare(coeffs[m])
        for t in range(1, min(m, n - m) + 1):
            prod = _imul(coeffs[m - t], coeffs[m + t])
            term = (2 * prod[0], 2 * prod[1]) if t % 2 == 0 else (-2 * prod[1], -2 * prod[0])
            acc = (acc[0] + term[0], acc[1] + term[1])
        if (n + m) % 2:
            acc = (-acc[1], -acc[0])
        out.append(acc)
    return out


def _iterate_bound(S: tuple[int, ...], k: int, precision: int) -> Dyadic | None:
    """Upper bound on the root radius of S from k Graeffe steps, None if precision ran out."""
    n = degree(S)
    coeffs = _rescale([(c, c) for c in S], precision)
    for _ in range(k):
        coeffs = _rescale(_graeffe_step(coeffs), precision)
    lead_lo = min(abs(coeffs[n][0]), abs(coeffs[n][1])) if coeffs[n][0] * coeffs[n][1] > 0 else 0
    if lead_lo <= 0:
        return None
    best = Dyadic(0, 0)
    for j in range(1, n + 1):
        lo, hi = coeffs[n - j]
        upper = max(abs(lo), abs(hi))
        if upper == 0:
            continue
        # |root| <= max_j (n |c_{n-j}| / |c_n|)^(1/j) on the iterate
        bound = Dyadic.root_up(Fraction(n * upper, lead_lo), j, ROOT_FRAC_BITS)
        for _ in range(k):
            bound = bound.sqrt_up(ROOT_FRAC_BITS)
        best = best.max(bound)
    return best


def root_radius_upper(R: Sequence[int], rel_tol: Fraction = DEFAULT_REL_TOL) -> Dyadic:
    """B0 with max|root of R| <= B0 <= (1 + rel_tol) * max(max|root|, 2^-20)."""
    R = trim(R)
    if degree(R) < 1:
        raise ValueError("root radius of a constant polynomial")
    rel_tol = Fraction(rel_tol)
    if not 0 < rel_tol <= Fraction(1, 8):
        raise ValueError("rel_tol must lie in (0, 1/8]")
    zeros = 0
    while R[zeros] == 0:
        zeros += 1
    S = squarefree_part_z(R[zeros:])
    n = degree(S)
    if n < 1:
        return RADIUS_FLOOR

    estimate = _estimate_radius(S)
    if estimate is None or not math.isfinite(estimate):
        logger.warning("Numerical radius estimate failed, using the Cauchy bound")
        return Dyadic.ceil_of(cauchy_bound(S), ROOT_FRAC_BITS).max(RADIUS_FLOOR)

    rho = Dyadic.ceil_of(Fraction(max(estimate, 2.0**-20)), SCALE_BITS)
    # S(rho w) * 2^(SCALE_BITS n) has integer coefficients
    m, e = rho.mantissa, rho.exponent
    if e >= 0:
        scaled = tuple(c * (m << e) ** i for i, c in enumerate(S))
    else:
        scaled = tuple(c * m**i << (-e * (n - i)) for i, c in enumerate(S))

    k = graeffe_steps(n, rel_tol)
    precision = 128 + k * (2 * n + 16)
    for attempt in range(MAX_PRECISION_RETRIES):
        bound = _iterate_bound(scaled, k, precision)
        if bound is not None:
            logger.debug(f"Root radius certified with k={k} Graeffe steps at {precision} bits")
            return (rho * bound).max(RADIUS_FLOOR)
        precision *= 2
        logger.debug(f"Leading coefficient lost, retrying at {precision} bits")
    logger.warning("Graeffe iteration lost precision, using the Cauchy bound")
    return Dyadic.ceil_of(cauchy_bound(S), ROOT_FRAC_BITS).max(RADIUS_FLOOR)
