"""Exact arithmetic in Q(alpha), alpha an indeterminate."""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..arith.polynomials import (
    RatPoly,
    add,
    degree,
    divmod_q,
    evaluate,
    monic,
    mul,
    neg,
    poly_gcd_q,
    scale,
    to_fractions,
)
from ..errors import ZeroDenominatorError


@dataclass(frozen=True)
class AlphaRat:
    """num / den in lowest terms with den monic."""

    num: RatPoly
    den: RatPoly

    @classmethod
    def make(cls, num, den) -> "AlphaRat":
        num, den = to_fractions(num), to_fractions(den)
        if not den:
            raise ZeroDenominatorError("zero denominator in Q(alpha)")
        if not num:
            return cls((), (Fraction(1),))
        g = poly_gcd_q(num, den)
        if degree(g) > 0:
            num, den = divmod_q(num, g)[0], divmod_q(den, g)[0]
        lc = den[-1]
        return cls(tuple(c / lc for c in num), monic(den))

    @classmethod
    def constant(cls, c) -> "AlphaRat":
        return cls.make((Fraction(c),), (Fraction(1),))

    @classmethod
    def poly(cls, f) -> "AlphaRat":
        return cls.make(f, (Fraction(1),))

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: "AlphaRat") -> "AlphaRat":
        if self.den == other.den:
            return AlphaRat.make(add(self.num, other.num), self.den)
        return AlphaRat.make(
            add(mul(self.num, other.den), mul(other.num, self.den)),
            mul(self.den, other.den),
        )

    def __neg__(self) -> "AlphaRat":
        return AlphaRat(neg(self.num), self.den)

    def __sub__(self, other: "AlphaRat") -> "AlphaRat":
        return self + (-other)

    def __mul__(self, other: "AlphaRat") -> "AlphaRat":
        return AlphaRat.make(mul(self.num, other.num), mul(self.den, other.den))

    def __truediv__(self, other: "AlphaRat") -> "AlphaRat":
        if other.is_zero():
            raise ZeroDenominatorError("division by zero in Q(alpha)")
        return AlphaRat.make(mul(self.num, other.den), mul(self.den, other.num))

    def scaled(self, c) -> "AlphaRat":
        return AlphaRat.make(scale(self.num, Fraction(c)), self.den)

    def at(self, value: Fraction) -> Fraction:
        """Value at alpha = value; raises when the denominator vanishes there."""
        d = evaluate(self.den, Fraction(value))
        if not d:
            raise ZeroDenominatorError(f"denominator vanishes at alpha={value}")
        return evaluate(self.num, Fraction(value)) / d


def binom_poly(k: int, s: int, r: int) -> RatPoly:
    """(k alpha + s)(k alpha + s - 1)...(k alpha + s - r + 1) / r! in Q[alpha]."""
    prod: RatPoly = (Fraction(1),)
    for j in range(r):
        prod = mul(prod, (Fraction(s - j), Fraction(k)))
    return tuple(c / factorial(r) for c in prod)


def binom_alpha(k: int, s: int, r: int) -> AlphaRat:
    """Generalized binomial coefficient binom(k alpha + s, r)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return AlphaRat.poly(binom_poly(k, s, r))
