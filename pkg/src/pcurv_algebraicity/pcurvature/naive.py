"""Direct p-curvature u^p + u^(p-1) of y' = u y over F_p.

Successive derivatives are kept as u^(k) = N_k / b^(k+1) with
N_(k+1) = N_k' b - (k+1) N_k b', so no gcd is taken inside the loop. The
coefficient arrays are int64 numpy vectors; every convolution sum stays below
2^63 because of the guard in ``_check_overflow``.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..arith.modular import (
    ModPoly,
    SeriesPrefix,
    check_prime_range,
    divmod_mod,
    gcd_mod,
    monic_mod,
    mul_trunc,
    reduce_fraction_mod,
    reduce_mod,
    series_inverse,
    taylor_shift_mod,
)
from ..errors import IdentityViolationError, UnsupportedPrimeRangeError

logger = logging.getLogger(__name__)

INT64_LIMIT = 2**63


@dataclass(frozen=True)
class ModRatFun:
    """num / den over F_p in lowest terms with monic den."""

    num: ModPoly
    den: ModPoly

    def is_zero(self) -> bool:
        return self.num.is_zero()


def _check_overflow(length: int, p: int) -> None:
    if length * (p - 1) ** 2 >= INT64_LIMIT:
        raise UnsupportedPrimeRangeError(f"naive p-curvature overflows int64 for p={p}")


def _trim(v: np.ndarray) -> np.ndarray:
    nz = np.nonzero(v)[0]
    return v[: nz[-1] + 1] if len(nz) else v[:0]


def _sub(f: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    size = max(len(f), len(g))
    out = np.zeros(size, dtype=np.int64)
    out[: len(f)] += f
    out[: len(g)] -= g
    return out % p


def curvature_root(a: Sequence[int], b: Sequence[int], p: int) -> ModRatFun:
    """psi^(1/p) as a reduced rational function, psi = u^p + u^(p-1)."""
    check_prime_range(p)
    a_bar, b_bar = reduce_fraction_mod(a, b, p)
    if not a_bar:
        return ModRatFun(ModPoly(p, ()), ModPoly(p, (1,)))
    n = len(b_bar) - 1
    _check_overflow(n + 1, p)

    bvec = np.array(b_bar, dtype=np.int64)
    dbvec = (bvec[1:] * np.arange(1, len(bvec), dtype=np.int64)) % p
    N = np.array(a_bar, dtype=np.int64)
    for k in range(p - 1):
        dN = (N[1:] * (np.arange(1, len(N), dtype=np.int64) % p)) % p
        first = np.convolve(dN, bvec) % p if len(dN) else np.zeros(0, dtype=np.int64)
        second = (np.convolve(N, dbvec) % p) * ((k + 1) % p) % p if len(dbvec) else np.zeros(0, dtype=np.int64)
        N = _trim(_sub(first, second, p))
        if not len(N):
            break

    # numerator of psi over b(x^p): a(x^p) + N_(p-1)
    total = np.zeros(max(len(N), p * (len(a_bar) - 1) + 1), dtype=np.int64)
    total[: len(N)] += N
    total[:: p][: len(a_bar)] += np.array(a_bar, dtype=np.int64)
    total = _trim(total % p)
    if np.any(np.delete(total, np.arange(0, len(total), p))):
        raise IdentityViolationError("p-curvature numerator is not a polynomial in x^p")
    root_num = reduce_mod([int(c) for c in total[::p]], p)
    logger.debug(f"Direct p-curvature at p={p}: numerator of degree {len(root_num) - 1}")

    g = gcd_mod(root_num, b_bar, p)
    num, den = root_num, b_bar
    if len(g) > 1:
        num = divmod_mod(num, g, p)[0]
        den = divmod_mod(den, g, p)[0]
    if num:
        inv = pow(den[-1], -1, p)
        num = tuple(c * inv % p for c in num)
    return ModRatFun(ModPoly(p, num), ModPoly(p, monic_mod(den, p)))


def _spread(f: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (p * (len(f) - 1) + 1) if f else []
    for i, c in enumerate(f):
        out[i * p] = c
    return tuple(out)


def curvature_naive(a: Sequence[int], b: Sequence[int], p: int) -> ModRatFun:
    """u^p + u^(p-1) over F_p in lowest terms.

    Intended for small primes as an oracle and as the fallback when no
    ordinary point exists in F_p.
    """
    root = curvature_root(a, b, p)
    return ModRatFun(
        ModPoly(p, _spread(root.num.coeffs, p)),
        ModPoly(p, _spread(root.den.coeffs, p)),
    )


def naive_prefix(a: Sequence[int], b: Sequence[int], p: int, shift: int, length: int) -> SeriesPrefix:
    """First coefficients of psi^(1/p)(x + shift), matching the prefix method's output."""
    root = curvature_root(a, b, p)
    num = taylor_shift_mod(root.num.coeffs, shift % p, p)
    den = taylor_shift_mod(root.den.coeffs, shift % p, p)
    if not num:
        return SeriesPrefix(p, (0,) * length)
    inv = series_inverse(ModPoly(p, den), length)
    return SeriesPrefix(p, tuple(mul_trunc(num, inv.coeffs, length, p)))
