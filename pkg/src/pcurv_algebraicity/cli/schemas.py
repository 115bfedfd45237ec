"""JSON output models shared by the CLI and the HTTP API.

Integers that may exceed 2^53 (delta, sigma, bounds) are decimal strings.
"""

from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel

from ..bounds.effective import BoundsReport
from ..deciders.verdicts import Algebraic, Inconclusive, KroneckerVerdict, NotSplit, Residues, Transcendental, Verdict
from ..hermite_pade.certificate import HPCertificate
from ..pcurvature.prefix import PCurvOutcome, PCurvPrefix


class DecideOutput(BaseModel):
    verdict: str
    method: str
    reason: Optional[str] = None
    witness_prime: Optional[int] = None
    residues: Optional[List[str]] = None
    multiplicities: Optional[List[int]] = None
    delta: Optional[str] = None
    sigma: Optional[str] = None
    checked_up_to: Optional[str] = None
    prime_range_exceeded: Optional[bool] = None


class BoundsOutput(BaseModel):
    degree: int
    height: str
    delta: str
    delta_cubed_upper: str
    B: str
    cauchy_bound: str
    M: str
    N: str
    sigma: str
    prime_range_exceeded: bool


class PCurvatureOutput(BaseModel):
    p: int
    outcome: str
    first_nonzero_index: Optional[int] = None
    shift: Optional[int] = None
    prefix: Optional[List[int]] = None


class KroneckerOutput(BaseModel):
    verdict: str
    sigma: str
    roots: Optional[List[str]] = None
    multiplicities: Optional[List[int]] = None
    witness_prime: Optional[int] = None
    rational_root_count: Optional[int] = None
    degree: Optional[int] = None


class HPVerifyOutput(BaseModel):
    M: int
    N: int
    sigma: int
    lead: str
    verified: bool


def _split(residues: Residues) -> tuple[list[str], list[int]]:
    return [str(Fraction(r)) for r, _ in residues], [m for _, m in residues]


def decide_output(verdict: Verdict, method: str, delta: int | None = None, report: BoundsReport | None = None) -> DecideOutput:
    out = DecideOutput(verdict=verdict.label, method=method)
    if delta is not None:
        out.delta = str(delta)
    if report is not None:
        out.sigma = str(report.sigma)
    if isinstance(verdict, Algebraic):
        out.residues, out.multiplicities = _split(verdict.residues)
    elif isinstance(verdict, Transcendental):
        out.reason = verdict.reason.value
        out.witness_prime = verdict.witness_prime
    elif isinstance(verdict, Inconclusive):
        out.sigma = str(verdict.sigma)
        out.checked_up_to = str(verdict.checked_up_to)
        out.prime_range_exceeded = verdict.prime_range_exceeded
    return out


def bounds_output(degree: int, height: int, report: BoundsReport, cauchy: Fraction) -> BoundsOutput:
    return BoundsOutput(
        degree=degree,
        height=str(height),
        delta=str(report.delta),
        delta_cubed_upper=str(report.delta_cubed_up),
        B=str(report.B),
        cauchy_bound=str(cauchy),
        M=str(report.M),
        N=str(report.N),
        sigma=str(report.sigma),
        prime_range_exceeded=report.prime_range_exceeded,
    )


def pcurvature_output(p: int, outcome: PCurvOutcome, prefix: PCurvPrefix | None = None) -> PCurvatureOutput:
    out = PCurvatureOutput(p=p, outcome=str(outcome), first_nonzero_index=outcome.first_nonzero_index)
    if prefix is not None:
        out.shift = prefix.shift
        out.prefix = list(prefix.coeffs.coeffs)
    return out


def kronecker_output(verdict: KroneckerVerdict) -> KroneckerOutput:
    out = KroneckerOutput(verdict=verdict.label, sigma=str(verdict.sigma))
    if isinstance(verdict, NotSplit):
        out.witness_prime = verdict.witness_prime
        if verdict.certificate is not None:
            out.rational_root_count = verdict.certificate.rational_root_count
            out.degree = verdict.certificate.degree
    else:
        out.roots, out.multiplicities = _split(verdict.roots)
    return out


def hp_output(cert: HPCertificate) -> HPVerifyOutput:
    return HPVerifyOutput(M=cert.M, N=cert.N, sigma=cert.sigma, lead=str(cert.lead), verified=True)
