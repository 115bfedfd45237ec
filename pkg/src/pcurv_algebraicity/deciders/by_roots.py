import logging
from fractions import Fraction
from typing import Sequence

from ..arith.polynomials import trim
from ..residues.normal_form import NormalForm, StructuralClass, classify, normalize
from ..residues.resultants import rothstein_trager
from ..residues.roots import rational_roots
from ..errors import InconsistentVerdictError, ZeroDenominatorError
from .verdicts import Algebraic, Residues, TranscendenceReason, Transcendental, Verdict

logger = logging.getLogger(__name__)

STRUCTURAL_REASONS = {
    StructuralClass.DEGREE_VIOLATION: TranscendenceReason.DEGREE_VIOLATION,
    StructuralClass.NON_SQUAREFREE: TranscendenceReason.NON_SQUAREFREE,
}


def scaled_residues(c: Fraction, roots: Sequence[tuple[Fraction, int]]) -> Residues:
    """Residues of u = c*a/b from the roots of R, sorted."""
    return tuple(sorted((c * root, mult) for root, mult in roots))


def check_residue_sum(nf: NormalForm, roots: Sequence[tuple[Fraction, int]]) -> None:
    """Residues of a/b add up to lc(a)/lc(b) when deg a = deg b - 1, and to 0 otherwise."""
    n = nf.degree
    expected = Fraction(nf.a[n - 1], nf.b[n]) if len(nf.a) == n else Fraction(0)
    total = sum((root * mult for root, mult in roots), Fraction(0))
    if total != expected:
        raise InconsistentVerdictError(f"residues sum to {total}, expected {expected}")


def decide_by_roots(a_raw: Sequence, b_raw: Sequence, n_jobs: int = 1) -> Verdict:
    """Algebraic exactly when every root of R(w) is rational."""
    if not trim(b_raw):
        raise ZeroDenominatorError("denominator is the zero polynomial")
    if not trim(a_raw):
        return Algebraic(residues=())
    nf = normalize(a_raw, b_raw)
    structure = classify(nf)
    if structure is not StructuralClass.ADMISSIBLE:
        logger.info(f"Structural obstruction: {structure.value}")
        return Transcendental(STRUCTURAL_REASONS[structure])
    rt = rothstein_trager(nf.a, nf.b, n_jobs=n_jobs)
    roots = rational_roots(rt.R)
    found = sum(mult for _, mult in roots)
    logger.info(f"{found} of {rt.degree} roots of R(w) are rational")
    if found == rt.degree:
        check_residue_sum(nf, roots)
        return Algebraic(residues=scaled_residues(nf.c, roots))
    return Transcendental(TranscendenceReason.IRRATIONAL_RESIDUE)
