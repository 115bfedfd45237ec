import logging
import math
from fractions import Fraction
from math import gcd
from typing import Sequence

import mpmath
from sympy import Poly, Symbol, divisors

from ..arith.polynomials import div_exact_z, evaluate, primitive_part, squarefree_part_z, trim
from ..bounds.root_radius import cauchy_bound

logger = logging.getLogger(__name__)

# candidates come from numerical roots once the end coefficients outgrow this many bits
DIVISOR_BITS = 48


def _divides(d: int, value: int) -> bool:
    if d == 0:
        return value == 0
    return value % d == 0


def _divisor_candidates(S: tuple[int, ...]) -> set[Fraction]:
    s_one, s_minus_one = evaluate(S, 1), evaluate(S, -1)
    found = set()
    for t in divisors(abs(S[-1])):
        for s in divisors(abs(S[0])):
            if gcd(s, t) != 1:
                continue
            for num in (s, -s):
                # t*w - num divides S, hence (t - num) | S(1) and (t + num) | S(-1)
                if not _divides(t - num, s_one) or not _divides(t + num, s_minus_one):
                    continue
                candidate = Fraction(num, t)
                if evaluate(S, candidate) == 0:
                    found.add(candidate)
    return found


def _numeric_candidates(S: tuple[int, ...]) -> set[Fraction] | None:
    """Rational roots of S located from numerical approximations, None when they are not accurate enough.

    Every rational root r of S has lc * r an integer of modulus at most lc times the
    Cauchy bound, so that many digits plus a margin resolve it.
    """
    lc = S[-1]
    magnitude = abs(lc) * math.ceil(cauchy_bound(S))
    dps = 30 + len(str(magnitude)) + 2 * len(S)
    try:
        with mpmath.workdps(dps):
            approx, err = mpmath.polyroots(
                list(reversed(S)), maxsteps=100 + 20 * len(S), extraprec=4 * dps, error=True
            )
            # lc * z must land within 1/4 of the integer lc * r
            if err * 4 * abs(lc) >= 1:
                logger.debug(f"polyroots error {mpmath.nstr(err, 5)} too large for degree {len(S) - 1}")
                return None
    except mpmath.mp.NoConvergence:
        logger.debug(f"polyroots did not converge for degree {len(S) - 1}")
        return None
    found = set()
    for z in approx:
        centre = int(mpmath.nint(mpmath.re(z) * lc))
        for num in (centre - 1, centre, centre + 1):
            candidate = Fraction(num, lc)
            if evaluate(S, candidate) == 0:
                found.add(candidate)
    return found


def _factored_candidates(S: tuple[int, ...]) -> set[Fraction]:
    """Roots of the linear factors of S over Z."""
    roots = Poly(list(reversed(S)), Symbol("w")).ground_roots()
    return {Fraction(int(r.p), int(r.q)) for r in roots}


def _candidates(S: tuple[int, ...]) -> set[Fraction]:
    if max(abs(S[0]).bit_length(), abs(S[-1]).bit_length()) > DIVISOR_BITS:
        found = _numeric_candidates(S)
        if found is not None:
            return found
        logger.warning("Numerical root location failed, factoring over the integers")
        return _factored_candidates(S)
    return _divisor_candidates(S)


def rational_roots(R: Sequence[int]) -> list[tuple[Fraction, int]]:
    """All rational roots of R with multiplicities, in increasing order."""
    R = trim(R)
    if not R:
        raise ValueError("rational roots of the zero polynomial")
    zeros = 0
    while zeros < len(R) and R[zeros] == 0:
        zeros += 1
    roots: list[tuple[Fraction, int]] = [(Fraction(0), zeros)] if zeros else []
    P = primitive_part(R[zeros:])
    if len(P) <= 1:
        return roots
    S = squarefree_part_z(P)
    for root in sorted(_candidates(S)):
        factor = (-root.numerator, root.denominator)
        mult = 0
        while True:
            quo = div_exact_z(P, factor)
            if quo is None:
                break
            P = quo
            mult += 1
        roots.append((root, mult))
    return sorted(roots)
