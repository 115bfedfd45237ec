from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from ..arith.polynomials import (
    IntPoly,
    content_primitive,
    degree,
    derivative,
    divmod_q,
    gcd_z,
    height,
    poly_gcd_q,
    trim,
)
from ..errors import ZeroDenominatorError, ZeroPolynomialError


class StructuralClass(str, Enum):
    ADMISSIBLE = "admissible"
    DEGREE_VIOLATION = "degree_violation"
    NON_SQUAREFREE = "non_squarefree"


@dataclass(frozen=True)
class NormalForm:
    """u = c * a / b with a, b primitive and coprime, lc(b) > 0."""

    c: Fraction
    a: IntPoly
    b: IntPoly

    @property
    def degree(self) -> int:
        return degree(self.b)

    @property
    def height(self) -> int:
        return max(height(self.a), height(self.b))


def normalize(a_raw: Sequence, b_raw: Sequence) -> NormalForm:
    """Bring a_raw / b_raw into normal form.

    The zero numerator is rejected; the deciders short-circuit u = 0 before
    calling this.
    """
    b_raw = trim(b_raw)
    if not b_raw:
        raise ZeroDenominatorError("denominator is the zero polynomial")
    a_raw = trim(a_raw)
    if not a_raw:
        raise ZeroPolynomialError("numerator is zero; u = 0 has constant solutions")
    g = poly_gcd_q(a_raw, b_raw)
    a_red = divmod_q(a_raw, g)[0]
    b_red = divmod_q(b_raw, g)[0]
    ca, a = content_primitive(a_red)
    cb, b = content_primitive(b_red)
    return NormalForm(c=ca / cb, a=a, b=b)


def classify(nf: NormalForm) -> StructuralClass:
    """Degree test first, then squarefreeness of b."""
    if degree(nf.a) >= degree(nf.b):
        return StructuralClass.DEGREE_VIOLATION
    if degree(gcd_z(nf.b, derivative(nf.b))) >= 1:
        return StructuralClass.NON_SQUAREFREE
    return StructuralClass.ADMISSIBLE
