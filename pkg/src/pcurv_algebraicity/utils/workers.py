import logging
from typing import Callable, Iterable, TypeVar

from joblib import Parallel, delayed

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

BACKENDS = ("threading", "loky")


def parallel_map(
    func: Callable[[T], R],
    items: Iterable[T],
    n_jobs: int = 1,
    backend: str = "threading",
) -> list[R]:
    """Apply func to every item, keeping input order in the result.

    With n_jobs == 1 the work runs inline; otherwise it is handed to a
    joblib pool. The loky backend needs func to be picklable.
    """
    items = list(items)
    if n_jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")
    return Parallel(n_jobs=n_jobs, backend=backend)(delayed(func)(item) for item in items)
