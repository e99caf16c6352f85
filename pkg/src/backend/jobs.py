"""
Trial execution for batch commands.

``bench`` and ``selftest`` hand a module-level function and a list of
arguments to :func:`run_trials`; results come back in argument order no
matter how many workers ran them.
"""

from __future__ import annotations

import logging
from typing import Callable, List, Sequence, TypeVar

from joblib import Parallel, delayed

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_trials(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Map ``func`` over ``items``, in parallel when ``workers`` > 1.
    """
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    n_jobs = min(workers, len(items))
    logger.debug("run_trials: %d items on %d workers", len(items), n_jobs)
    return list(Parallel(n_jobs=n_jobs)(delayed(func)(item) for item in items))
