import random
from fractions import Fraction

import mpmath
import pytest
import sympy

from pcurv_algebraicity.arith.polynomials import mul, power
from pcurv_algebraicity.residues.roots import rational_roots

from corpora import IRREDUCIBLE_QUADRATICS, random_linear_product

w = sympy.Symbol("w")


def test_worked_example():
    assert rational_roots((5, 9, -18)) == [(Fraction(-1, 3), 1), (Fraction(5, 6), 1)]


def test_multiplicities_and_zero_root():
    R = mul(mul(power((-1, 1), 2), (3, 2)), (0, 1))
    assert rational_roots(R) == [(Fraction(-3, 2), 1), (Fraction(0), 1), (Fraction(1), 2)]


def test_irrational_roots():
    assert rational_roots((-2, 0, 1)) == []
    assert rational_roots(mul((-2, 0, 1), (1, 1))) == [(Fraction(-1), 1)]


def test_constant_and_zero():
    assert rational_roots((7,)) == []
    with pytest.raises(ValueError):
        rational_roots(())


def test_large_coefficients():
    big = 10**20
    R = mul((-big, 3), (7, 1))
    assert rational_roots(R) == [(Fraction(-7), 1), (Fraction(big, 3), 1)]


@pytest.mark.parametrize("exponent", [40, 60, 120])
def test_root_beyond_default_precision(exponent):
    huge = 10**exponent
    assert rational_roots(mul((-huge, 1), (-3, 1))) == [(Fraction(3), 1), (Fraction(huge), 1)]
    R = mul(mul((-huge, 7), (1, 0, 1)), (5, 2))
    assert rational_roots(R) == [(Fraction(-5, 2), 1), (Fraction(huge, 7), 1)]


def test_factoring_when_numerics_fail(monkeypatch):
    def no_convergence(*args, **kwargs):
        raise mpmath.mp.NoConvergence

    monkeypatch.setattr(mpmath, "polyroots", no_convergence)
    huge = 10**60
    R = mul(mul((-huge, 1), (-3, 1)), (-2, 0, 1))
    assert rational_roots(R) == [(Fraction(3), 1), (Fraction(huge), 1)]


def test_random_products_against_sympy():
    rng = random.Random(99)
    for _ in range(100):
        R, roots = random_linear_product(rng)
        if rng.random() < 0.5:
            R = mul(R, rng.choice(IRREDUCIBLE_QUADRATICS))
        found = rational_roots(R)
        expected = {}
        for factor, mult in sympy.Poly(list(reversed(R)), w).factor_list()[1]:
            if factor.degree() == 1:
                c1, c0 = (int(c) for c in factor.all_coeffs())
                root = Fraction(-c0, c1)
                expected[root] = expected.get(root, 0) + mult
        assert dict(found) == expected
        assert sum(m for _, m in found) == len(roots)
