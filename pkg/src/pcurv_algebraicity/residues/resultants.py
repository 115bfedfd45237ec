import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import comb
from typing import Sequence

from ..arith.polynomials import IntPoly, degree, derivative, mul, scale, sub, trim
from ..arith.resultant import resultant_z
from ..errors import InterpolationMismatchError
from ..utils.workers import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RTResultant:
    """R(w) = res_x(b, a - w b') together with delta = |res(b, b')|."""

    R: IntPoly
    delta: int

    @property
    def degree(self) -> int:
        return degree(self.R)


def delta_of(b: Sequence[int]) -> int:
    """|res(b, b')| without building R(w)."""
    return abs(resultant_z(b, derivative(b)))


def _value_at(w: int, a: IntPoly, b: IntPoly, db: IntPoly) -> int:
    # a - w b' has formal degree n - 1; scale when the actual degree drops
    g = sub(a, scale(db, w))
    if not g:
        return 0
    formal = degree(b) - 1
    return b[-1] ** (formal - degree(g)) * resultant_z(b, g)


def _interpolate(values: list[int]) -> tuple[Fraction, ...]:
    """Monomial coefficients of the polynomial through (i, values[i]), i = 0..n."""
    n = len(values) - 1
    table = [Fraction(v) for v in values]
    newton = [table[0]]
    for level in range(1, n + 1):
        table = [(table[i + 1] - table[i]) / level for i in range(len(table) - 1)]
        newton.append(table[0])
    coeffs: tuple = (newton[n],)
    for k in range(n - 1, -1, -1):
        coeffs = mul(coeffs, (-k, 1))
        coeffs = trim([coeffs[0] + newton[k]] + list(coeffs[1:])) if coeffs else (newton[k],)
    return tuple(Fraction(c) for c in coeffs)


def rothstein_trager(a: Sequence[int], b: Sequence[int], n_jobs: int = 1, delta: int | None = None) -> RTResultant:
    """Evaluate R at w = 0..n with integer resultants and interpolate over Q."""
    a, b = trim(a), trim(b)
    n = degree(b)
    db = derivative(b)
    values = parallel_map(partial(_value_at, a=a, b=b, db=db), range(n + 1), n_jobs=n_jobs)
    coeffs = _interpolate(values)
    if any(c.denominator != 1 for c in coeffs):
        raise InterpolationMismatchError("interpolated resultant has non-integral coefficients")
    R = trim([int(c) for c in coeffs])
    if delta is None:
        delta = delta_of(b)
    if degree(R) != n or abs(R[-1]) != delta:
        raise InterpolationMismatchError(
            f"leading coefficient {R[-1] if R else 0} of degree {degree(R)} does not match delta={delta}"
        )
    logger.debug(f"Rothstein-Trager resultant of degree {n} with delta={delta}")
    return RTResultant(R=R, delta=delta)


def height_bound_check(rt: RTResultant, n: int, H: int) -> bool:
    """Check the coefficient size bound of R(w) for inputs of height at most H.

    |r_k| <= C(n,k) 6^(-k/2) H^(2n-1) (n+1)^((n+k-1)/2) n^(n/2) (2n+1)^(k/2),
    compared exactly after squaring both sides.
    """
    for k, r in enumerate(rt.R):
        lhs = r * r * 6**k
        rhs = comb(n, k) ** 2 * H ** (2 * (2 * n - 1)) * (n + 1) ** (n + k - 1) * n**n * (2 * n + 1) ** k
        if lhs > rhs:
            logger.debug(f"coefficient r_{k} violates the height bound")
            return False
    return True
