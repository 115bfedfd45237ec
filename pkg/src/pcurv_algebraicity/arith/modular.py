"""Polynomials and truncated power series over F_p.

Low-level helpers work on coefficient lists (index = degree) together with
an explicit prime; ``ModPoly`` and ``SeriesPrefix`` are the immutable
carriers handed between modules.
"""

from dataclasses import dataclass
from typing import Sequence

from ..errors import (
    DegenerateDenominatorError,
    NotInvertibleError,
    UnsupportedPrimeRangeError,
    ZeroPolynomialError,
)
from .polynomials import mul as _mul_z
from .polynomials import trim

PRIME_LIMIT = 2**62


def check_prime_range(p: int) -> int:
    if p < 2 or p >= PRIME_LIMIT:
        raise UnsupportedPrimeRangeError(f"prime {p} outside the supported range [2, 2^62)")
    return p


@dataclass(frozen=True)
class ModPoly:
    p: int
    coeffs: tuple[int, ...]

    @classmethod
    def reduce(cls, coeffs: Sequence[int], p: int) -> "ModPoly":
        check_prime_range(p)
        return cls(p, reduce_mod(coeffs, p))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass(frozen=True)
class SeriesPrefix:
    p: int
    coeffs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, k: int) -> "SeriesPrefix":
        return SeriesPrefix(self.p, self.coeffs[:k])


def reduce_mod(coeffs: Sequence[int], p: int) -> tuple[int, ...]:
    return trim([c % p for c in coeffs])


def add_mod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[int, ...]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out)


def mul_mod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[int, ...]:
    return reduce_mod(_mul_z(f, g), p)


def mul_trunc(f: Sequence[int], g: Sequence[int], k: int, p: int) -> list[int]:
    """First k coefficients of f*g mod p, zero padded to length k."""
    prod = _mul_z(f[:k], g[:k])
    out = [c % p for c in prod[:k]]
    return out + [0] * (k - len(out))


def derivative_mod(f: Sequence[int], p: int) -> tuple[int, ...]:
    return trim([i * f[i] % p for i in range(1, len(f))])


def eval_mod(f: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def monic_mod(f: Sequence[int], p: int) -> tuple[int, ...]:
    f = trim(f)
    if not f:
        return ()
    inv = pow(f[-1], -1, p)
    return tuple(c * inv % p for c in f)


def divmod_mod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(trim(f))
    dg = len(g) - 1
    if len(rem) <= dg:
        return (), tuple(rem)
    inv = pow(g[-1], -1, p)
    quo = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1 - dg, -1, -1):
        c = rem[i + dg] * inv % p
        quo[i] = c
        if c:
            for j, gj in enumerate(g):
                rem[i + j] = (rem[i + j] - c * gj) % p
    return trim(quo), trim(rem[:dg])


def rem_mod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[int, ...]:
    return divmod_mod(f, g, p)[1]


def gcd_mod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[int, ...]:
    """Monic gcd over F_p; gcd(0, 0) = 0."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, rem_mod(f, g, p)
    return monic_mod(f, p)


def reduce_fraction_mod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """a/b reduced modulo p and cancelled by the gcd of the reductions."""
    a_bar, b_bar = reduce_mod(a, p), reduce_mod(b, p)
    if not b_bar:
        raise DegenerateDenominatorError(f"denominator vanishes modulo {p}")
    g = gcd_mod(a_bar, b_bar, p)
    if len(g) > 1:
        a_bar = divmod_mod(a_bar, g, p)[0]
        b_bar = divmod_mod(b_bar, g, p)[0]
    return a_bar, b_bar


def taylor_shift_mod(f: Sequence[int], c: int, p: int) -> tuple[int, ...]:
    """Coefficients of f(x + c) over F_p."""
    out = list(f)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = (out[j] + c * out[j + 1]) % p
    return trim(out)


def series_inverse(b: ModPoly, k: int) -> SeriesPrefix:
    """First k coefficients of 1/b by Newton iteration (precision 1, 2, 4, ...)."""
    p = b.p
    if not b.coeffs or b.coeffs[0] % p == 0:
        raise NotInvertibleError("constant term vanishes modulo p")
    if k <= 0:
        return SeriesPrefix(p, ())
    s = [pow(b.coeffs[0], -1, p)]
    prec = 1
    while prec < k:
        prec *= 2
        e = mul_trunc(b.coeffs, s, prec, p)
        t = [(-c) % p for c in e]
        t[0] = (t[0] + 2) % p
        s = mul_trunc(s, t, prec, p)
    return SeriesPrefix(p, tuple(s[:k]))


def quotient_pow(base: ModPoly, e: int, f: ModPoly) -> ModPoly:
    """base^e in F_p[x]/(f) by square and multiply."""
    p = f.p
    if not f.coeffs:
        raise ZeroDivisionError("modulus is the zero polynomial")
    modulus = f.coeffs
    result: tuple[int, ...] = rem_mod((1,), modulus, p)
    acc = rem_mod(base.coeffs, modulus, p)
    while e:
        if e & 1:
            result = rem_mod(mul_mod(result, acc, p), modulus, p)
        e >>= 1
        if e:
            acc = rem_mod(mul_mod(acc, acc, p), modulus, p)
    return ModPoly(p, result)


def frobenius_root(f: Sequence[int], p: int) -> tuple[int, ...]:
    """g with g(x)^p = f(x) for f in F_p[x^p]; coefficients are fixed by Frobenius."""
    return trim([f[i] for i in range(0, len(f), p)])


def _radical(f: tuple[int, ...], p: int) -> tuple[int, ...]:
    f = monic_mod(f, p)
    if len(f) <= 1:
        return (1,)
    df = derivative_mod(f, p)
    if not df:
        return _radical(frobenius_root(f, p), p)
    g = gcd_mod(f, df, p)
    r = divmod_mod(f, g, p)[0]
    # strip from g every factor already carried by r; what is left is a p-th power
    h = g
    while True:
        common = gcd_mod(h, r, p)
        if len(common) <= 1:
            break
        h = divmod_mod(h, common, p)[0]
    if len(h) <= 1:
        return monic_mod(r, p)
    return monic_mod(mul_mod(r, _radical(frobenius_root(h, p), p), p), p)


def squarefree_part_mod_p(poly: ModPoly) -> ModPoly:
    """Monic polynomial with the roots of poly in the algebraic closure, each once."""
    if not poly.coeffs:
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    return ModPoly(poly.p, _radical(poly.coeffs, poly.p))
