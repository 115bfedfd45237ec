from typing import Sequence

from .polynomials import degree, integer_content, prem, trim


def _split_content(f: Sequence[int]) -> tuple[int, list[int]]:
    g = integer_content(f)
    return g, [c // g for c in f]


def resultant_z(f: Sequence[int], g: Sequence[int]) -> int:
    """Resultant of two integer polynomials by the subresultant PRS.

    Follows the Sylvester determinant convention
    res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.
    The resultant with a constant c is c^(degree of the other argument).
    """
    f, g = trim(f), trim(g)
    if not f or not g:
        return 0
    df, dg = degree(f), degree(g)
    if df == 0 and dg == 0:
        return 1
    if dg == 0:
        return g[0] ** df
    if df == 0:
        return f[0] ** dg

    a, A = _split_content(f)
    b, B = _split_content(g)
    t = a ** dg * b ** df
    s = 1
    if df < dg:
        A, B = B, A
        if df % 2 and dg % 2:
            s = -1
    g_, h = 1, 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = prem(A, B)
        if not R:
            return 0
        A = B
        divisor = g_ * h ** delta
        B = [c // divisor for c in R]
        g_ = A[-1]
        if delta:
            h = g_ ** delta // h ** (delta - 1)
        if len(B) == 1:
            break
    da = len(A) - 1
    h = B[-1] ** da // h ** (da - 1)
    return s * t * h
