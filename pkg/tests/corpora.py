"""Seeded random inputs shared by the test modules."""

import random
from fractions import Fraction

from pcurv_algebraicity.arith.polynomials import degree, derivative, gcd_z, mul, trim


def random_poly(rng: random.Random, deg: int, height: int, monic_sign: bool = False) -> tuple[int, ...]:
    coeffs = [rng.randint(-height, height) for _ in range(deg)]
    lead = 0
    while lead == 0:
        lead = rng.randint(1 if monic_sign else -height, height)
    return tuple(coeffs) + (lead,)


def random_admissible(rng: random.Random, max_degree: int, height: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(a, b) primitive-free integer pair with deg a < deg b, gcd 1, b squarefree, a nonzero."""
    while True:
        n = rng.randint(1, max_degree)
        b = random_poly(rng, n, height)
        a = trim([rng.randint(-height, height) for _ in range(n)])
        if not a:
            continue
        if degree(gcd_z(a, b)) > 0 or degree(gcd_z(b, derivative(b))) > 0:
            continue
        return a, b


def admissible_corpus(seed: int, count: int, max_degree: int, height: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    rng = random.Random(seed)
    return [random_admissible(rng, max_degree, height) for _ in range(count)]


def random_linear_product(rng: random.Random, max_factors: int = 4) -> tuple[tuple[int, ...], list[Fraction]]:
    """Integer polynomial prod (d w - n) with its rational roots."""
    poly: tuple[int, ...] = (1,)
    roots = []
    for _ in range(rng.randint(1, max_factors)):
        num, den = rng.randint(-10, 10), rng.randint(1, 5)
        poly = mul(poly, (-num, den))
        roots.append(Fraction(num, den))
    return poly, roots


IRREDUCIBLE_QUADRATICS = [(-2, 0, 1), (-3, 0, 1), (1, 0, 1), (1, 1, 1), (-5, 0, 1), (-7, 0, 2), (3, -1, 1)]
