"""Algebraicity through vanishing p-curvatures below the effective bound sigma.

Phase one visits the primes up to min(delta, budget), collecting the prime
divisors of delta on the way. Only then are R(w), its root radius and sigma
computed, and phase two continues up to min(sigma - 1, budget).
"""

import logging
from fractions import Fraction
from functools import partial
from typing import Callable, Sequence

from ..arith.polynomials import IntPoly, trim
from ..bounds.dyadic import Dyadic
from ..bounds.effective import DEFAULT_FRAC_BITS, BoundsReport, delta_cubed_upper, effective_bounds
from ..bounds.root_radius import DEFAULT_REL_TOL, root_radius_upper
from ..errors import InconsistentVerdictError, ZeroDenominatorError
from ..pcurvature.prefix import BAD_PRIME, OutcomeKind, PCurvOutcome, curvature_outcome
from ..residues.normal_form import StructuralClass, classify, normalize
from ..residues.resultants import delta_of, rothstein_trager
from ..residues.roots import rational_roots
from ..utils.primes import factor_by_trial_division, primes_between
from .by_roots import STRUCTURAL_REASONS, check_residue_sum, scaled_residues
from .scan import scan_primes
from .verdicts import Algebraic, Inconclusive, TranscendenceReason, Transcendental, Verdict

logger = logging.getLogger(__name__)

TraceCallback = Callable[[int, PCurvOutcome], None]


def _outcome_at(p: int, a: IntPoly, b: IntPoly, delta: int) -> PCurvOutcome:
    if delta % p == 0:
        return BAD_PRIME
    return curvature_outcome(a, b, p, delta)


def _is_witness(outcome: PCurvOutcome) -> bool:
    return outcome.is_witness


def decide_honda(
    a_raw: Sequence,
    b_raw: Sequence,
    budget: int | None = None,
    n_jobs: int = 1,
    rel_tol: Fraction = DEFAULT_REL_TOL,
    frac_bits: int = DEFAULT_FRAC_BITS,
    backend: str = "threading",
    on_prime: TraceCallback | None = None,
) -> tuple[Verdict, BoundsReport | None]:
    """Decide algebraicity of the solutions of y' = u y, u = a_raw / b_raw.

    The bounds report is None when the answer is reached before sigma is
    needed: u = 0, a structural obstruction, or a witness below delta.
    """
    if not trim(b_raw):
        raise ZeroDenominatorError("denominator is the zero polynomial")
    if not trim(a_raw):
        return Algebraic(residues=()), None
    nf = normalize(a_raw, b_raw)
    structure = classify(nf)
    if structure is not StructuralClass.ADMISSIBLE:
        logger.info(f"Structural obstruction: {structure.value}")
        return Transcendental(STRUCTURAL_REASONS[structure]), None

    a, b = nf.a, nf.b
    delta = delta_of(b)
    evaluate = partial(_outcome_at, a=a, b=b, delta=delta)

    phase_one = delta if budget is None else min(delta, budget)
    logger.info(f"Phase one: primes up to {phase_one} (delta={delta})")
    divisors: list[int] = []

    def record(p: int, outcome: PCurvOutcome) -> None:
        if outcome.kind is OutcomeKind.BAD_PRIME:
            divisors.append(p)
        if on_prime is not None:
            on_prime(p, outcome)

    hit = scan_primes(primes_between(1, phase_one), evaluate, _is_witness, n_jobs, backend, record)
    if hit is not None:
        logger.info(f"Nonvanishing {hit[0]}-curvature")
        return Transcendental(TranscendenceReason.NONVANISHING_CURVATURE, witness_prime=hit[0]), None

    if phase_one < delta:
        primes, cofactor = factor_by_trial_division(delta)
    else:
        primes, cofactor = divisors, 1
    delta_cubed = delta_cubed_upper(delta, frac_bits, primes=primes, cofactor=cofactor)

    rt = rothstein_trager(a, b, n_jobs=n_jobs, delta=delta)
    B = root_radius_upper(rt.R, rel_tol).max(Dyadic.from_int(1))
    report = effective_bounds(delta, B, frac_bits, delta_cubed=delta_cubed)
    logger.info(f"sigma={report.sigma} (M={report.M}, N={report.N}, B={B})")

    if report.prime_range_exceeded and budget is None:
        logger.warning("sigma beyond the supported prime range, giving up without a budget")
        return Inconclusive(checked_up_to=phase_one, sigma=report.sigma, prime_range_exceeded=True), report

    limit = report.sigma - 1 if budget is None else min(report.sigma - 1, budget)
    if limit > phase_one:
        hit = scan_primes(primes_between(phase_one, limit), evaluate, _is_witness, n_jobs, backend, on_prime)
        if hit is not None:
            logger.info(f"Nonvanishing {hit[0]}-curvature")
            return Transcendental(TranscendenceReason.NONVANISHING_CURVATURE, witness_prime=hit[0]), report

    if limit < report.sigma - 1:
        logger.info(f"Budget exhausted at {limit} below sigma={report.sigma}")
        return (
            Inconclusive(
                checked_up_to=limit,
                sigma=report.sigma,
                prime_range_exceeded=report.prime_range_exceeded,
            ),
            report,
        )

    roots = rational_roots(rt.R)
    found = sum(mult for _, mult in roots)
    if found != rt.degree:
        raise InconsistentVerdictError(
            f"all p-curvatures below sigma vanish but only {found} of {rt.degree} residues are rational"
        )
    check_residue_sum(nf, roots)
    return Algebraic(residues=scaled_residues(nf.c, roots)), report
