import logging
from fractions import Fraction
from functools import partial
from typing import Sequence

from ..arith.modular import ModPoly, check_prime_range, quotient_pow, rem_mod, squarefree_part_mod_p
from ..arith.polynomials import degree, trim
from ..bounds.dyadic import Dyadic
from ..bounds.effective import BoundsReport, effective_bounds
from ..bounds.root_radius import DEFAULT_REL_TOL, root_radius_upper
from ..errors import BadPrimeError, InconsistentVerdictError, PrimeRangeExceededError
from ..residues.roots import rational_roots
from ..utils.primes import primes_between
from .scan import scan_primes
from .verdicts import IrrationalRootCertificate, KroneckerVerdict, NotSplit, SplitsOverQ

logger = logging.getLogger(__name__)


def splits_mod_p(R: Sequence[int], p: int) -> bool:
    """True iff R mod p is a product of linear factors over F_p."""
    check_prime_range(p)
    R = trim(R)
    if not R or R[-1] % p == 0:
        raise BadPrimeError(f"{p} divides the leading coefficient")
    S = squarefree_part_mod_p(ModPoly.reduce(R, p))
    if S.degree <= 0:
        return True
    x = ModPoly(p, (0, 1))
    # S divides w^p - w
    return quotient_pow(x, p, S).coeffs == rem_mod(x.coeffs, S.coeffs, p)


def bounds_for(R: Sequence[int], rel_tol: Fraction = DEFAULT_REL_TOL, frac_bits: int = 32) -> BoundsReport:
    """BoundsReport for an integer polynomial with positive leading coefficient."""
    B = root_radius_upper(R, rel_tol).max(Dyadic.from_int(1))
    return effective_bounds(R[-1], B, frac_bits)


def _splits_at(p: int, R: tuple[int, ...]) -> bool:
    return splits_mod_p(R, p)


def kronecker_decide(
    R: Sequence[int],
    budget: int | None = None,
    n_jobs: int = 1,
    rel_tol: Fraction = DEFAULT_REL_TOL,
    backend: str = "threading",
) -> KroneckerVerdict:
    """Decide whether R splits into linear factors over Q by reduction modulo the primes below sigma."""
    R = trim(R)
    if not R:
        raise ValueError("Kronecker test of the zero polynomial")
    if R[-1] < 0:
        raise ValueError("leading coefficient must be positive")
    if degree(R) == 0:
        return SplitsOverQ(roots=(), sigma=0)

    report = bounds_for(R, rel_tol)
    if report.prime_range_exceeded and budget is None:
        raise PrimeRangeExceededError(report)
    limit = report.sigma - 1 if budget is None else min(report.sigma - 1, budget)
    delta = report.delta
    logger.info(f"Kronecker scan: delta={delta} sigma={report.sigma} limit={limit}")

    good = (p for p in primes_between(1, limit) if delta % p)
    hit = scan_primes(good, partial(_splits_at, R=R), lambda splits: not splits, n_jobs=n_jobs, backend=backend)
    if hit is not None:
        return NotSplit(sigma=report.sigma, witness_prime=hit[0])

    roots = tuple(rational_roots(R))
    found = sum(mult for _, mult in roots)
    if limit == report.sigma - 1:
        if found != degree(R):
            raise InconsistentVerdictError(
                f"all good primes below sigma split but only {found} of {degree(R)} roots are rational"
            )
        return SplitsOverQ(roots=roots, sigma=report.sigma)

    logger.info(f"Budget {budget} below sigma, resolving with rational roots")
    if found == degree(R):
        return SplitsOverQ(roots=roots, sigma=report.sigma)
    return NotSplit(
        sigma=report.sigma,
        certificate=IrrationalRootCertificate(rational_root_count=found, degree=degree(R)),
    )
