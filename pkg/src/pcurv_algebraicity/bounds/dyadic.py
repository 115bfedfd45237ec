from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from sympy import integer_nthroot


def _ceil_div(n: int, d: int) -> int:
    return -((-n) // d)


def iroot_up(n: int, m: int) -> int:
    """Smallest integer y >= 0 with y^m >= n."""
    root, exact = integer_nthroot(n, m)
    return int(root) if exact else int(root) + 1


@total_ordering
@dataclass(frozen=True, eq=False)
class Dyadic:
    """mantissa * 2^exponent, used only as an upper bound carrier.

    Every constructor and operation here rounds towards +infinity.
    """

    mantissa: int
    exponent: int

    @classmethod
    def from_int(cls, n: int) -> "Dyadic":
        return cls(n, 0).normalized()

    @classmethod
    def ceil_of(cls, value: Fraction, frac_bits: int) -> "Dyadic":
        """Smallest multiple of 2^-frac_bits not below value."""
        value = Fraction(value)
        return cls(_ceil_div(value.numerator << frac_bits, value.denominator), -frac_bits).normalized()

    @classmethod
    def root_up(cls, value: Fraction, m: int, frac_bits: int) -> "Dyadic":
        """Upper bound on value^(1/m) at frac_bits fractional bits."""
        value = Fraction(value)
        if value < 0:
            raise ValueError("root of a negative number")
        scaled = _ceil_div(value.numerator << (frac_bits * m), value.denominator)
        return cls(iroot_up(scaled, m), -frac_bits).normalized()

    def normalized(self) -> "Dyadic":
        m, e = self.mantissa, self.exponent
        if m == 0:
            return Dyadic(0, 0)
        while m % 2 == 0:
            m //= 2
            e += 1
        return Dyadic(m, e)

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        return Dyadic(self.mantissa * other.mantissa, self.exponent + other.exponent).normalized()

    def sqrt_up(self, frac_bits: int) -> "Dyadic":
        return Dyadic.root_up(self.to_fraction(), 2, frac_bits)

    def max(self, other: "Dyadic") -> "Dyadic":
        return self if self >= other else other

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self.to_fraction() == other.to_fraction()
        return self.to_fraction() == other

    def __lt__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self.to_fraction() < other.to_fraction()
        return self.to_fraction() < other

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __str__(self) -> str:
        return f"{float(self):.9g}"
