import random
from fractions import Fraction
from math import sqrt

import pytest
from sympy import nextprime

from pcurv_algebraicity.arith.polynomials import mul
from pcurv_algebraicity.bounds.dyadic import Dyadic, iroot_up
from pcurv_algebraicity.bounds.effective import PRIME_RANGE_LIMIT, delta_cubed_upper, effective_bounds
from pcurv_algebraicity.bounds.root_radius import (
    DEFAULT_REL_TOL,
    RADIUS_FLOOR,
    cauchy_bound,
    graeffe_steps,
    root_radius_upper,
)
from pcurv_algebraicity.residues.resultants import rothstein_trager

ONE = Dyadic.from_int(1)


class TestDyadic:
    def test_iroot_up(self):
        assert iroot_up(27, 3) == 3
        assert iroot_up(28, 3) == 4
        assert iroot_up(0, 5) == 0

    def test_ceil_of_rounds_up(self):
        d = Dyadic.ceil_of(Fraction(1, 3), 4)
        assert d.to_fraction() == Fraction(3, 8)
        assert Dyadic.ceil_of(Fraction(5, 4), 8).to_fraction() == Fraction(5, 4)

    def test_root_up(self):
        r = Dyadic.root_up(Fraction(2), 2, 32)
        assert r.to_fraction() ** 2 >= 2
        assert r.to_fraction() - Fraction(1, 2**32) < sqrt(2)
        assert Dyadic.root_up(Fraction(8), 1, 10) == 8

    def test_arithmetic_and_order(self):
        a, b = Dyadic(3, -1), Dyadic(5, 0)
        assert (a * b).to_fraction() == Fraction(15, 2)
        assert a < b
        assert a.max(b) == b
        assert Dyadic(4, 0) == Dyadic(1, 2)
        assert hash(Dyadic(4, 0)) == hash(Dyadic(1, 2))
        assert str(Dyadic.from_int(1)) == "1"

    def test_negative_root(self):
        with pytest.raises(ValueError):
            Dyadic.root_up(Fraction(-1), 2, 8)


class TestRootRadius:
    def test_cauchy_bound(self):
        assert cauchy_bound((-6, 1, 1)) == 7
        assert cauchy_bound((1, 0, -16)) == Fraction(17, 16)

    def test_graeffe_steps(self):
        assert graeffe_steps(1, DEFAULT_REL_TOL) == 0
        k = graeffe_steps(10, Fraction(1, 1024))
        assert 100 ** (1 / 2**k) <= 1 + 1 / 2048
        assert 100 ** (1 / 2 ** (k - 1)) > 1 + 1 / 2048

    @pytest.mark.parametrize(
        "R, radius",
        [
            ((-6, 1, 1), Fraction(3)),
            ((1, 0, -16), Fraction(1, 4)),
            ((5, 9, -18), Fraction(5, 6)),
            (mul((-7, 2), (1, 0, 1)), Fraction(7, 2)),
            ((3, -6, 3), Fraction(1)),
        ],
    )
    def test_within_tolerance(self, R, radius):
        B = root_radius_upper(R).to_fraction()
        assert radius <= B <= radius * (1 + DEFAULT_REL_TOL)

    def test_tighter_tolerance(self):
        B = root_radius_upper((-2, 0, 1), Fraction(1, 10**6)).to_fraction()
        assert 2 <= B * B <= 2 * (1 + Fraction(3, 10**6))

    def test_floor(self):
        assert root_radius_upper((0, 0, 0, 1)) == RADIUS_FLOOR
        assert root_radius_upper((1, 10**12)) == RADIUS_FLOOR

    def test_errors(self):
        with pytest.raises(ValueError):
            root_radius_upper((5,))
        with pytest.raises(ValueError):
            root_radius_upper((1, 1), Fraction(1, 2))

    def test_upper_bound_on_random_products(self):
        rng = random.Random(3)
        for _ in range(30):
            R, roots = (1,), []
            for _ in range(rng.randint(1, 6)):
                num, den = rng.randint(-50, 50), rng.randint(1, 9)
                R = mul(R, (-num, den))
                roots.append(Fraction(num, den))
            radius = max(abs(r) for r in roots)
            B = root_radius_upper(R).to_fraction()
            assert B >= radius
            assert B <= max(radius, Fraction(1, 2**20)) * (1 + DEFAULT_REL_TOL)


class TestEffectiveBounds:
    def test_poles_at_plus_minus_two(self):
        report = effective_bounds(16, ONE)
        assert (report.M, report.N, report.sigma) == (92603, 562656, 104208014998)
        assert not report.prime_range_exceeded

    def test_unit_delta(self):
        assert effective_bounds(1, ONE).sigma == 139
        assert effective_bounds(1, Dyadic.from_int(2)).sigma == 265

    def test_numerator_equal_to_derivative(self):
        assert effective_bounds(3, ONE).sigma == 1919129
        rt = rothstein_trager((1, 2), (1, 1, 1))
        B = root_radius_upper(rt.R).max(ONE)
        sigma = effective_bounds(rt.delta, B).sigma
        assert 1919129 <= sigma <= 1920719
        assert abs(sigma - 1926284) <= 0.01 * 1926284

    def test_delta_cubed(self):
        assert delta_cubed_upper(16) == 8
        assert delta_cubed_upper(1) == 1
        d = delta_cubed_upper(3).to_fraction()
        assert d**2 >= 27
        assert d - Fraction(1, 2**32) < 27**0.5

    def test_delta_cubed_with_unfactored_cofactor(self):
        p = int(nextprime(10**6))
        q = int(nextprime(p))
        bound = delta_cubed_upper(6 * p * q)
        exact = 2**3 * 3**1.5 * p ** (3 / (p - 1)) * q ** (3 / (q - 1))
        assert float(bound) >= exact

    def test_prime_range(self):
        report = effective_bounds(10**6, ONE)
        assert report.sigma >= PRIME_RANGE_LIMIT
        assert report.prime_range_exceeded

    def test_errors(self):
        with pytest.raises(ValueError):
            effective_bounds(0, ONE)
        with pytest.raises(ValueError):
            effective_bounds(4, Dyadic(1, -1))
