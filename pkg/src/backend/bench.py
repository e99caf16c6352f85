"""
Fast criterion against the brute-force oracle on random polynomial pairs.
"""

from __future__ import annotations

import logging
import random
import time
from typing import List, Tuple

import pandas as pd

from backend.jobs import run_trials
from core.field import char_of
from core.models.reports import BenchModel, BenchTrial
from core.poly import Poly
from core.ratfn import RatFn
from derivations.criterion import is_p_closed
from derivations.derivation import Derivation, brute_obstruction

logger = logging.getLogger(__name__)

COLUMNS = ["trial", "fast_s", "brute_s", "fast_verdict", "brute_verdict", "agree"]


def random_poly(rng: random.Random, p: int, deg: int, max_terms: int = 3) -> Poly:
    """A polynomial in x, y of total degree at most ``deg``."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        i = rng.randint(0, deg)
        j = rng.randint(0, deg - i)
        terms[(i, j)] = rng.randrange(1, p)
    return Poly(terms, 2, char_of(p))


def bench_pair(p: int, deg: int, seed: int, trial: int) -> Tuple[RatFn, RatFn]:
    rng = random.Random(f"{seed}:{trial}")
    return (
        RatFn.from_poly(random_poly(rng, p, deg)),
        RatFn.from_poly(random_poly(rng, p, deg)),
    )


def _one_trial(args: Tuple[int, int, int, int]) -> BenchTrial:
    p, deg, seed, trial = args
    f, g = bench_pair(p, deg, seed, trial)

    start = time.perf_counter()
    fast = is_p_closed(f, g, witness=False).p_closed
    fast_s = time.perf_counter() - start

    start = time.perf_counter()
    brute = brute_obstruction(Derivation.of(f, g)).is_zero
    brute_s = time.perf_counter() - start

    return BenchTrial(
        trial=trial, fast_s=fast_s, brute_s=brute_s,
        fast_verdict=fast, brute_verdict=brute, agree=fast == brute,
    )


def run_bench(p: int, deg: int, trials: int, seed: int = 0, workers: int = 1) -> BenchModel:
    records: List[BenchTrial] = run_trials(
        _one_trial, [(p, deg, seed, t) for t in range(trials)], workers
    )
    records.sort(key=lambda r: r.trial)
    fast_total = sum(r.fast_s for r in records)
    brute_total = sum(r.brute_s for r in records)
    agreements = sum(r.agree for r in records)
    if agreements != trials:
        logger.error("bench: %d of %d trials disagree", trials - agreements, trials)
    return BenchModel(
        p=p,
        deg=deg,
        trials=trials,
        agreements=agreements,
        speedup=brute_total / fast_total if fast_total > 0 else None,
        records=records,
    )


def bench_table(report: BenchModel) -> pd.DataFrame:
    frame = pd.DataFrame([r.model_dump() for r in report.records], columns=COLUMNS)
    return frame.set_index("trial")


def render_bench(report: BenchModel) -> str:
    table = bench_table(report).to_string(float_format=lambda v: f"{v:.4f}")
    speedup = "n/a" if report.speedup is None else f"{report.speedup:.2f}x"
    summary = (
        f"p = {report.p}, deg <= {report.deg}: "
        f"{report.agreements}/{report.trials} agree, fast-path speedup {speedup}"
    )
    return f"{table}\n{summary}"
