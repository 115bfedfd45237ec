import random

import hypothesis.strategies as st
import sympy
from hypothesis import given

from pcurv_algebraicity.arith.polynomials import degree, gcd_z, mul, trim
from pcurv_algebraicity.arith.resultant import resultant_z

from corpora import random_poly

small_polys = st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=7).map(trim).filter(bool)


def sylvester_det(f, g) -> int:
    m, n = degree(f), degree(g)
    F, G = list(reversed(f)), list(reversed(g))
    rows = [[0] * i + F + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + G + [0] * (m - 1 - i) for i in range(m)]
    return int(sympy.Matrix(rows).det())


def test_worked_example():
    # 2x^2 + x - 1 against its derivative 4x + 1
    assert resultant_z((-1, 1, 2), (1, 4)) == -18


def test_constants_and_zero():
    assert resultant_z((3,), (1, 2, 1)) == 9
    assert resultant_z((1, 2, 1), (3,)) == 9
    assert resultant_z((), (1, 1)) == 0
    assert resultant_z((5,), (7,)) == 1


def test_sign_follows_sylvester_convention():
    # res(x + 1, x^3) = (-1)^3
    assert resultant_z((1, 1), (0, 0, 0, 1)) == -1
    assert sylvester_det((1, 1), (0, 0, 0, 1)) == -1
    assert resultant_z((0, 0, 0, 1), (1, 1)) == 1


@given(small_polys, small_polys)
def test_matches_sylvester_determinant(f, g):
    if degree(f) == 0 and degree(g) == 0:
        return
    assert resultant_z(f, g) == sylvester_det(f, g)


@given(small_polys, small_polys)
def test_swap_sign(f, g):
    assert resultant_z(g, f) == (-1) ** (degree(f) * degree(g)) * resultant_z(f, g)


def test_zero_exactly_on_common_factor():
    rng = random.Random(1234)
    for i in range(500):
        f = random_poly(rng, rng.randint(1, 4), 9)
        g = random_poly(rng, rng.randint(1, 4), 9)
        if i % 2:
            shared = random_poly(rng, 1, 5)
            f, g = mul(f, shared), mul(g, shared)
        assert (resultant_z(f, g) == 0) == (degree(gcd_z(f, g)) > 0)
