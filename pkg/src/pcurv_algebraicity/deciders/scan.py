import logging
from itertools import islice
from typing import Callable, Iterable, TypeVar

from ..utils.workers import parallel_map

logger = logging.getLogger(__name__)

T = TypeVar("T")

CHUNK_PER_WORKER = 16


def scan_primes(
    primes: Iterable[int],
    evaluate: Callable[[int], T],
    is_witness: Callable[[T], bool],
    n_jobs: int = 1,
    backend: str = "threading",
    on_result: Callable[[int, T], None] | None = None,
) -> tuple[int, T] | None:
    """Smallest prime whose result is a witness, or None when the primes run out.

    Primes are evaluated in chunks, in parallel within a chunk, and merged in
    ascending order so the answer does not depend on the worker count.
    """
    it = iter(primes)
    chunk_size = CHUNK_PER_WORKER * n_jobs
    while True:
        chunk = list(islice(it, chunk_size))
        if not chunk:
            return None
        results = parallel_map(evaluate, chunk, n_jobs=n_jobs, backend=backend)
        for p, result in zip(chunk, results):
            if on_result is not None:
                on_result(p, result)
            if is_witness(result):
                logger.debug(f"Witness prime {p}")
                return p, result
