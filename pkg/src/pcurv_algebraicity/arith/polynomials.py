"""Dense univariate polynomials over Z and Q.

A polynomial is a tuple of coefficients ordered by degree (index i holds the
coefficient of x^i) with no trailing zeros; the zero polynomial is ``()``.
Integer polynomials hold ``int`` coefficients, rational ones ``Fraction``.
All functions return new tuples and never mutate their arguments.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from ..errors import ZeroPolynomialError

IntPoly = tuple[int, ...]
RatPoly = tuple[Fraction, ...]

KARATSUBA_THRESHOLD = 32


def trim(coeffs: Sequence) -> tuple:
    """Drop trailing zero coefficients."""
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


def degree(f: Sequence) -> int:
    """Degree of a trimmed polynomial, -1 for zero."""
    return len(f) - 1


def leading(f: Sequence):
    return f[-1] if f else 0


def add(f: Sequence, g: Sequence) -> tuple:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def neg(f: Sequence) -> tuple:
    return tuple(-c for c in f)


def sub(f: Sequence, g: Sequence) -> tuple:
    return add(f, neg(g))


def scale(f: Sequence, c) -> tuple:
    if not c:
        return ()
    return trim([x * c for x in f])


def _classical(f: Sequence, g: Sequence) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if not fi:
            continue
        for j, gj in enumerate(g):
            out[i + j] += fi * gj
    return out


def _raw_add(f: Sequence, g: Sequence) -> list:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return out


def _karatsuba(f: Sequence, g: Sequence) -> list:
    if min(len(f), len(g)) <= KARATSUBA_THRESHOLD:
        return _classical(f, g)
    half = max(len(f), len(g)) // 2
    f0, f1 = f[:half], f[half:]
    g0, g1 = g[:half], g[half:]
    low = _karatsuba(f0, g0)
    high = _karatsuba(f1, g1)
    mid = _karatsuba(_raw_add(f0, f1), _raw_add(g0, g1))
    size = max(len(f) + len(g) - 1, half + len(mid), 2 * half + len(high))
    out = [0] * size
    for i, c in enumerate(low):
        out[i] += c
        out[i + half] -= c
    for i, c in enumerate(high):
        out[i + 2 * half] += c
        out[i + half] -= c
    for i, c in enumerate(mid):
        out[i + half] += c
    return out


def mul(f: Sequence, g: Sequence) -> tuple:
    """Product; classical below KARATSUBA_THRESHOLD terms, Karatsuba above."""
    return trim(_karatsuba(f, g))


def power(f: Sequence, e: int) -> tuple:
    result: tuple = (1,)
    base = tuple(f)
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def derivative(f: Sequence) -> tuple:
    return trim([i * f[i] for i in range(1, len(f))])


def evaluate(f: Sequence, x):
    """Horner evaluation; exact for int and Fraction arguments."""
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def taylor_shift(f: Sequence, c) -> tuple:
    """Coefficients of f(x + c)."""
    out = list(f)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return trim(out)


def reverse(f: Sequence, n: int | None = None) -> tuple:
    """x^n f(1/x), with n defaulting to deg f."""
    if n is None:
        n = degree(f)
    padded = list(f) + [0] * (n + 1 - len(f))
    return trim(padded[: n + 1][::-1])


def to_fractions(f: Sequence) -> RatPoly:
    return tuple(Fraction(c) for c in trim(f))


def monic(f: Sequence) -> RatPoly:
    f = trim(f)
    if not f:
        return ()
    lc = Fraction(f[-1])
    return tuple(Fraction(c) / lc for c in f)


def divmod_q(f: Sequence, g: Sequence) -> tuple[RatPoly, RatPoly]:
    """Euclidean division over Q."""
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in trim(f)]
    dg = len(g) - 1
    if len(rem) <= dg:
        return (), tuple(rem)
    lc = Fraction(g[-1])
    quo = [Fraction(0)] * (len(rem) - dg)
    for i in range(len(rem) - 1 - dg, -1, -1):
        c = rem[i + dg] / lc
        quo[i] = c
        if c:
            for j, gj in enumerate(g):
                rem[i + j] -= c * gj
    return trim(quo), trim(rem[:dg])


def div_exact_z(f: Sequence, g: Sequence) -> IntPoly | None:
    """Quotient f/g in Z[x] when g divides f exactly there, otherwise None."""
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(trim(f))
    dg = len(g) - 1
    if len(rem) <= dg:
        return () if not rem else None
    lc = g[-1]
    quo = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1 - dg, -1, -1):
        c, r = divmod(rem[i + dg], lc)
        if r:
            return None
        quo[i] = c
        if c:
            for j, gj in enumerate(g):
                rem[i + j] -= c * gj
    if any(rem[:dg]):
        return None
    return trim(quo)


def prem(f: Sequence, g: Sequence) -> IntPoly:
    """Pseudo-remainder of f by g: lc(g)^(deg f - deg g + 1) f mod g."""
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    df, dg = degree(f), degree(g)
    if df < dg:
        return f
    rem = list(f)
    lc = g[-1]
    for k in range(df - dg, -1, -1):
        c = rem[k + dg]
        rem = [x * lc for x in rem]
        if c:
            for j in range(dg + 1):
                rem[k + j] -= c * g[j]
    return trim(rem[:dg])


def integer_content(f: Sequence[int]) -> int:
    """Nonnegative gcd of the coefficients."""
    g = 0
    for c in f:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def clear_denominators(f: Sequence) -> tuple[int, IntPoly]:
    """Return (L, L*f) with L the lcm of the coefficient denominators."""
    f = trim(f)
    denom = 1
    for c in f:
        denom = lcm(denom, Fraction(c).denominator)
    return denom, tuple(int(Fraction(c) * denom) for c in f)


def content_primitive(f: Sequence) -> tuple[Fraction, IntPoly]:
    """Split f as content * primitive with a positive leading coefficient."""
    f = trim(f)
    if not f:
        raise ZeroPolynomialError("content of the zero polynomial")
    denom, ints = clear_denominators(f)
    g = integer_content(ints)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, denom), tuple(c // g for c in ints)


def primitive_part(f: Sequence) -> IntPoly:
    if not trim(f):
        return ()
    return content_primitive(f)[1]


def gcd_z(f: Sequence, g: Sequence) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    f, g = primitive_part(f), primitive_part(g)
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = prem(f, g)
        f, g = g, primitive_part(r)
    return f


def poly_gcd_q(f: Sequence, g: Sequence) -> RatPoly:
    """Monic gcd over Q; gcd(f, 0) = monic(f) and gcd(0, 0) = 0."""
    return monic(gcd_z(f, g))


def squarefree_part_z(f: Sequence) -> IntPoly:
    """Primitive polynomial with the roots of f, each once."""
    f = primitive_part(f)
    if len(f) <= 2:
        return f
    g = gcd_z(f, derivative(f))
    if len(g) == 1:
        return f
    quo = div_exact_z(f, g)
    return primitive_part(quo)


def height(f: Sequence[int]) -> int:
    return max((abs(c) for c in f), default=0)


def format_poly(f: Sequence, var: str = "x") -> str:
    """Render f so the expression parser reads it back unchanged."""
    f = trim(f)
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = Fraction(f[i])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
