from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

Residues = tuple[tuple[Fraction, int], ...]


class TranscendenceReason(str, Enum):
    DEGREE_VIOLATION = "degree_violation"
    NON_SQUAREFREE = "non_squarefree"
    IRRATIONAL_RESIDUE = "irrational_residue"
    NONVANISHING_CURVATURE = "nonvanishing_curvature"


@dataclass(frozen=True)
class Algebraic:
    residues: Residues

    label = "algebraic"


@dataclass(frozen=True)
class Transcendental:
    reason: TranscendenceReason
    witness_prime: int | None = None

    label = "transcendental"


@dataclass(frozen=True)
class Inconclusive:
    """Prime budget exhausted before sigma; never a positive answer."""

    checked_up_to: int
    sigma: int
    prime_range_exceeded: bool = False

    label = "inconclusive"


Verdict = Algebraic | Transcendental | Inconclusive


@dataclass(frozen=True)
class IrrationalRootCertificate:
    """Rational roots account for fewer roots than the degree."""

    rational_root_count: int
    degree: int


@dataclass(frozen=True)
class SplitsOverQ:
    roots: Residues
    sigma: int

    label = "splits"


@dataclass(frozen=True)
class NotSplit:
    sigma: int
    witness_prime: int | None = None
    certificate: IrrationalRootCertificate | None = None

    label = "not_split"


KroneckerVerdict = SplitsOverQ | NotSplit
