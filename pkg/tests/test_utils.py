import pytest
from sympy import nextprime

from pcurv_algebraicity.utils.primes import factor_by_trial_division, primes_between
from pcurv_algebraicity.utils.workers import parallel_map


def test_primes_between():
    assert list(primes_between(1, 20)) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert list(primes_between(7, 13)) == [11, 13]
    assert list(primes_between(1, 1)) == []


def test_factor_small():
    assert factor_by_trial_division(18) == ([2, 3], 1)
    assert factor_by_trial_division(1) == ([], 1)
    assert factor_by_trial_division(97) == ([97], 1)


def test_factor_large_prime_cofactor():
    p = int(nextprime(10**12))
    assert factor_by_trial_division(12 * p) == ([2, 3, p], 1)


def test_factor_composite_cofactor():
    p = int(nextprime(10**6))
    q = int(nextprime(p))
    primes, rest = factor_by_trial_division(5 * p * q, limit=10**3)
    assert primes == [5]
    assert rest == p * q


def test_factor_rejects_nonpositive():
    with pytest.raises(ValueError):
        factor_by_trial_division(0)


@pytest.mark.parametrize("backend", ["threading", "loky"])
def test_parallel_map_keeps_order(backend):
    assert parallel_map(abs, range(-20, 0), n_jobs=3, backend=backend) == list(range(20, 0, -1))


def test_parallel_map_inline_and_errors():
    assert parallel_map(str, [1, 2], n_jobs=1) == ["1", "2"]
    with pytest.raises(ValueError):
        parallel_map(str, [1, 2], n_jobs=2, backend="processes")
