from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcurv_algebraicity.arith.polynomials import add
from pcurv_algebraicity.errors import ZeroDenominatorError
from pcurv_algebraicity.hermite_pade.alpha import AlphaRat, binom_alpha, binom_poly
from pcurv_algebraicity.hermite_pade.certificate import (
    MAX_SIGMA,
    expected_lead,
    hp_check_at,
    hp_coefficients,
    hp_verify,
    sigma_of,
)

ALPHA = AlphaRat.poly((0, 1))


class TestAlphaRat:
    def test_canonical_form(self):
        r = AlphaRat.make((2, 2), (4, 4, 0))
        assert r == AlphaRat.constant(Fraction(1, 2))
        assert AlphaRat.make((), (3, 1)) == AlphaRat.constant(0)

    def test_field_operations(self):
        x = AlphaRat.make((1,), (-1, 1))
        y = ALPHA * ALPHA
        assert (x + y) - y == x
        assert x / x == AlphaRat.constant(1)
        assert (x * y) / y == x
        assert x.scaled(3) == AlphaRat.make((3,), (-1, 1))

    def test_zero_division(self):
        with pytest.raises(ZeroDenominatorError):
            AlphaRat.make((1,), ())
        with pytest.raises(ZeroDenominatorError):
            ALPHA / AlphaRat.constant(0)
        with pytest.raises(ZeroDenominatorError):
            AlphaRat.make((1,), (-1, 1)).at(Fraction(1))

    def test_evaluation(self):
        assert AlphaRat.make((1, 1), (0, 2)).at(Fraction(1, 3)) == 2

    def test_binomials(self):
        # binom(2 alpha + 1, 2) = (2 alpha + 1)(2 alpha) / 2
        assert binom_poly(2, 1, 2) == (Fraction(0), Fraction(1), Fraction(2))
        assert binom_alpha(3, 5, 0) == AlphaRat.constant(1)
        with pytest.raises(ValueError):
            binom_alpha(1, 0, -1)

    @given(
        k=st.integers(-4, 4),
        s=st.integers(-6, 6),
        r=st.integers(1, 6),
    )
    def test_pascal_rule(self, k, s, r):
        assert binom_poly(k, s, r) == add(binom_poly(k, s - 1, r), binom_poly(k, s - 1, r - 1))

    @given(
        k=st.integers(-4, 4),
        s=st.integers(-6, 6),
        ell=st.integers(0, 6),
        data=st.data(),
    )
    def test_subset_of_subset_identity(self, k, s, ell, data):
        # binom(x, l) binom(l, m) = binom(x, m) binom(x - m, l - m) for x = k alpha + s
        m = data.draw(st.integers(0, ell))
        left = binom_alpha(k, s, ell).scaled(comb(ell, m))
        right = binom_alpha(k, s, m) * binom_alpha(k, s - m, ell - m)
        assert left == right

    @given(
        k=st.integers(0, 4),
        n=st.integers(0, 5),
        s=st.integers(0, 6),
        r=st.integers(0, 8),
    )
    def test_integer_specialization(self, k, n, s, r):
        assert binom_alpha(k, s, r).at(Fraction(n)) == comb(k * n + s, r)


class TestApproximants:
    def test_sigma_and_lead(self):
        assert sigma_of(1, 1) == 5
        assert sigma_of(2, 2) == 14
        assert expected_lead(1, 1) == Fraction(1, 120)

    def test_table_shape(self):
        table = hp_coefficients(2, 3)
        assert len(table) == 5
        assert all(len(row) == 4 for row in table)

    def test_table_entries(self):
        table = hp_coefficients(1, 1)
        # -3 / (alpha (alpha^2 - 1)(4 alpha^2 - 1)) and 1 / (2 alpha^2 (alpha - 1)(2 alpha - 1))
        assert table[0][0] == AlphaRat.make((-3,), (0, 1, 0, -5, 0, 4))
        assert table[0][1] == AlphaRat.make((1,), (0, 0, 2, -6, 4))
        assert table[1][0] == AlphaRat.constant(0)
        assert table[1][1] == AlphaRat.make((1,), (0, 0, -1, 0, 1))
        assert table[2][0] == AlphaRat.make((3,), (0, 1, 0, -5, 0, 4))
        assert table[2][1] == AlphaRat.make((1,), (0, 0, 2, 6, 4))

    def test_low_order_coefficients_vanish(self):
        # z^0 and z^1 of sum_i P_i(z) (1 - z)^((i - 1) alpha) for M = N = 1
        table = hp_coefficients(1, 1)
        constant = table[0][0] + table[1][0] + table[2][0]
        assert constant.is_zero()
        linear = AlphaRat.constant(0)
        for i, (p0, p1) in enumerate(table):
            linear = linear + p1 - p0 * binom_alpha(i, 0, 1)
        assert linear.is_zero()

    @pytest.mark.parametrize("M, N", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)])
    def test_identity_holds(self, M, N):
        cert = hp_verify(M, N)
        assert cert.sigma == sigma_of(M, N)
        assert cert.lead == expected_lead(M, N)
        assert len(cert.approximants) == 2 * M + 1

    def test_parallel_verification(self):
        assert hp_verify(1, 2, n_jobs=3).lead == expected_lead(1, 2)

    @pytest.mark.parametrize("alpha", [Fraction(1, 7), Fraction(3, 5)])
    @pytest.mark.parametrize("M, N", [(1, 2), (2, 1)])
    def test_specialized_identity(self, M, N, alpha):
        assert hp_check_at(M, N, alpha) == expected_lead(M, N)

    def test_specialization_at_pole(self):
        with pytest.raises(ZeroDenominatorError):
            hp_check_at(1, 1, Fraction(1))

    def test_guards(self):
        with pytest.raises(ValueError):
            hp_verify(0, 1)
        with pytest.raises(ValueError):
            hp_coefficients(1, 0)
        assert sigma_of(3, 4) <= MAX_SIGMA
        assert sigma_of(4, 4) > MAX_SIGMA
        assert sigma_of(3, 5) > MAX_SIGMA
        with pytest.raises(ValueError, match="symbolic limit"):
            hp_verify(4, 4)
        with pytest.raises(ValueError, match="symbolic limit"):
            hp_verify(3, 5)
