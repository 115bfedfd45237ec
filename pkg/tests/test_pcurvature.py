import pytest
from sympy import primerange

from pcurv_algebraicity.arith.modular import ModPoly, SeriesPrefix
from pcurv_algebraicity.deciders.kronecker import splits_mod_p
from pcurv_algebraicity.errors import NoOrdinaryPointError, UnsupportedPrimeRangeError
from pcurv_algebraicity.pcurvature.naive import curvature_naive, curvature_root, naive_prefix
from pcurv_algebraicity.pcurvature.prefix import (
    BAD_PRIME,
    ZERO,
    OutcomeKind,
    curvature_outcome,
    curvature_prefix,
    fiduccia_extract,
)
from pcurv_algebraicity.residues.normal_form import normalize
from pcurv_algebraicity.residues.resultants import delta_of, rothstein_trager

from corpora import admissible_corpus

WORKED_A, WORKED_B = (2, 1), (-1, 1, 2)


@pytest.fixture(scope="module")
def corpus():
    pairs = []
    for a, b in admissible_corpus(seed=77, count=200, max_degree=6, height=2**8):
        nf = normalize(a, b)
        pairs.append((nf.a, nf.b, delta_of(nf.b)))
    return pairs


def test_worked_example_bad_primes():
    for p in (2, 3):
        prefix, outcome = curvature_prefix(WORKED_A, WORKED_B, p)
        assert prefix is None
        assert outcome == BAD_PRIME
        assert str(outcome) == "BadPrime"


def test_worked_example_vanishes_at_good_primes():
    for p in primerange(5, 1001):
        assert curvature_outcome(WORKED_A, WORKED_B, p, 18) == ZERO


def test_first_witness_for_large_pole():
    a, b = (1,), (-3818929, 0, 1)
    delta = delta_of(b)
    for p in primerange(2, 47):
        if delta % p:
            assert curvature_outcome(a, b, p, delta).kind is OutcomeKind.ZERO
    outcome = curvature_outcome(a, b, 47, delta)
    assert outcome.is_witness
    assert str(outcome) == "NonZero"


def test_irrational_residues_nonzero():
    # 1/(x^2 - 2) has residues +-1/(2 sqrt 2); 2 is not a square mod 3
    _, outcome = curvature_prefix((1,), (-2, 0, 1), 3)
    assert outcome.kind is OutcomeKind.NONZERO
    assert outcome.first_nonzero_index is not None


def test_prefix_length_and_shift():
    # b(0) = 0 modulo 5 forces a shift to the first ordinary point
    prefix, outcome = curvature_prefix((1,), (0, 1, 1), 5)
    assert prefix.shift == 1
    assert prefix.n_bar == 2
    assert len(prefix.coeffs) == 4
    assert outcome == ZERO


def test_no_ordinary_point_falls_back():
    # x^2 + x vanishes on all of F_2; residues 1 and -1 of 1/(x^2 + x) are integers
    assert curvature_outcome((1,), (0, 1, 1), 2, delta_of((0, 1, 1))) == ZERO


def test_fiduccia_matches_direct_recurrence():
    p = 7
    # s_(k+2) = s_(k+1) + s_k, characteristic polynomial x^2 - x - 1
    f = ModPoly.reduce((-1, -1, 1), p)
    seq = [0, 1]
    while len(seq) < 5 * p:
        seq.append((seq[-1] + seq[-2]) % p)
    terms = fiduccia_extract(f, SeriesPrefix(p, (0, 1)), p, 4)
    assert terms == [seq[(i + 1) * p - 1] for i in range(4)]


def test_naive_wilson_sign():
    # u = 1/x: u^p + u^(p-1) = x^-p + (p-1)! x^-p = 0
    for p in (3, 5, 7, 11):
        assert curvature_naive((1,), (0, 1), p).is_zero()
        assert curvature_root((1,), (0, 1), p).is_zero()


def test_naive_nonzero_root():
    # residue 1/2 lies in F_5
    assert curvature_naive((1,), (0, 2), 5).is_zero()
    # u = x / (x^2 + 1) has residues 1/2 at +-i, still in F_p
    assert curvature_naive((0, 1), (1, 0, 1), 7).is_zero()
    # u = 1/(x^2 + 1) has residues +-1/(2i), not in F_7
    assert not curvature_naive((1,), (1, 0, 1), 7).is_zero()


def test_naive_overflow_guard():
    with pytest.raises(UnsupportedPrimeRangeError):
        curvature_root((1,), (1, 0, 1), 2**61 - 1)


def test_prefix_agrees_with_naive(corpus):
    mismatches = 0
    for a, b, delta in corpus:
        for p in primerange(2, 51):
            if delta % p == 0:
                continue
            try:
                prefix, outcome = curvature_prefix(a, b, p, delta)
            except NoOrdinaryPointError:
                continue
            expected = naive_prefix(a, b, p, prefix.shift, len(prefix.coeffs))
            naive_zero = curvature_naive(a, b, p).is_zero()
            if prefix.coeffs != expected or (outcome == ZERO) != naive_zero:
                mismatches += 1
    assert mismatches == 0


def test_vanishing_equals_splitting(corpus):
    mismatches = 0
    for a, b, delta in corpus:
        R = rothstein_trager(a, b, delta=delta).R
        for p in primerange(2, 51):
            if delta % p == 0:
                continue
            zero = curvature_outcome(a, b, p, delta) == ZERO
            if zero != splits_mod_p(R, p):
                mismatches += 1
    assert mismatches == 0
