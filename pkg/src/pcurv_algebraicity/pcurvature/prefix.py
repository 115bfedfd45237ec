"""One p-curvature of y' = (a/b) y from a short series prefix.

psi^(1/p) = u + v where v collects the coefficients u_(ip+p-1) of the Taylor
expansion of u = a/b, each multiplied by (p-1)! = -1. Both parts are
rational with denominator b, so psi vanishes exactly when the first 2*deg(b)
coefficients of u + v do. The far coefficients u_(ip+p-1) come from the
linear recurrence whose characteristic polynomial is the reversal of b,
by powering x in F_p[x]/(rev b).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ..arith.modular import (
    ModPoly,
    SeriesPrefix,
    check_prime_range,
    eval_mod,
    mul_mod,
    mul_trunc,
    quotient_pow,
    reduce_fraction_mod,
    rem_mod,
    series_inverse,
    taylor_shift_mod,
)
from ..errors import NoOrdinaryPointError
from ..residues.resultants import delta_of
from .naive import curvature_root

logger = logging.getLogger(__name__)


class OutcomeKind(str, Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    BAD_PRIME = "bad_prime"


@dataclass(frozen=True)
class PCurvOutcome:
    kind: OutcomeKind
    first_nonzero_index: int | None = None

    @property
    def is_witness(self) -> bool:
        return self.kind is OutcomeKind.NONZERO

    def __str__(self) -> str:
        return {OutcomeKind.ZERO: "Zero", OutcomeKind.NONZERO: "NonZero", OutcomeKind.BAD_PRIME: "BadPrime"}[
            self.kind
        ]


ZERO = PCurvOutcome(OutcomeKind.ZERO)
BAD_PRIME = PCurvOutcome(OutcomeKind.BAD_PRIME)


@dataclass(frozen=True)
class PCurvPrefix:
    p: int
    shift: int
    n_bar: int
    coeffs: SeriesPrefix


def fiduccia_extract(f: ModPoly, init: SeriesPrefix, p: int, m: int) -> list[int]:
    """Terms p-1, 2p-1, ..., mp-1 of the recurrent sequence with characteristic polynomial f."""
    q = f.p
    x = ModPoly(q, (0, 1))
    step = quotient_pow(x, p, f).coeffs
    current = quotient_pow(x, p - 1, f).coeffs
    terms = []
    for i in range(m):
        if i:
            current = rem_mod(mul_mod(current, step, q), f.coeffs, q)
        terms.append(sum(phi * u for phi, u in zip(current, init.coeffs)) % q)
    return terms


def _ordinary_point(b_bar: tuple[int, ...], p: int) -> int:
    for c in range(p):
        if eval_mod(b_bar, c, p):
            return c
    raise NoOrdinaryPointError(f"the reduced denominator vanishes on all of F_{p}")


def curvature_prefix(
    a: Sequence[int], b: Sequence[int], p: int, delta: int | None = None
) -> tuple[PCurvPrefix | None, PCurvOutcome]:
    """Prefix of psi^(1/p) and its nullity; no prefix for a bad prime."""
    check_prime_range(p)
    if delta is None:
        delta = delta_of(b)
    if delta % p == 0:
        return None, BAD_PRIME

    a_bar, b_bar = reduce_fraction_mod(a, b, p)
    n_bar = len(b_bar) - 1
    if n_bar == 0 or not a_bar:
        return PCurvPrefix(p, 0, n_bar, SeriesPrefix(p, (0,) * (2 * n_bar))), ZERO

    shift = _ordinary_point(b_bar, p)
    if shift:
        a_bar = taylor_shift_mod(a_bar, shift, p)
        b_bar = taylor_shift_mod(b_bar, shift, p)

    length = 2 * n_bar
    inverse = series_inverse(ModPoly(p, b_bar), length)
    u = mul_trunc(a_bar, inverse.coeffs, length, p)
    f = ModPoly(p, tuple(reversed(b_bar)))
    far = fiduccia_extract(f, SeriesPrefix(p, tuple(u[:n_bar])), p, length)
    coeffs = tuple((ui - vi) % p for ui, vi in zip(u, far))

    prefix = PCurvPrefix(p, shift, n_bar, SeriesPrefix(p, coeffs))
    for i, c in enumerate(coeffs):
        if c:
            return prefix, PCurvOutcome(OutcomeKind.NONZERO, i)
    return prefix, ZERO


def curvature_outcome(a: Sequence[int], b: Sequence[int], p: int, delta: int) -> PCurvOutcome:
    """Nullity of the p-curvature, falling back to the direct formula without an ordinary point."""
    try:
        return curvature_prefix(a, b, p, delta)[1]
    except NoOrdinaryPointError:
        logger.warning(f"No ordinary point modulo {p}, using the direct p-curvature")
        if curvature_root(a, b, p).is_zero():
            return ZERO
        return PCurvOutcome(OutcomeKind.NONZERO)
