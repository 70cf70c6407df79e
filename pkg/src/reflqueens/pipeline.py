"""Sample a weighted square set, colour it, and extract a rainbow matching.

For small boards exhaustive search is cheaper than the reduction and also
settles non-existence, so ``build_configuration`` hands n <= 12 to
:func:`reflqueens.exact.solve_first`.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import exact
from .board import check_size
from .config import Configuration, is_valid, slater_is_valid, to_slater
from .rainbow import (
    BoundednessReport,
    SearchParams,
    SearchStats,
    build_graph,
    find_rainbow_matching,
    verify_bounded,
)
from .sampler import SampleStats, SquareSet, check_subset, sample_subset

log = logging.getLogger(__name__)

EXACT_CUTOFF = 12
MAX_RESAMPLES = 5


def derive_seed(seed: int, *path: int) -> int:
    """Deterministic 64-bit child seed for (seed, *path)."""
    ss = np.random.SeedSequence([seed, *path])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass
class PipelineResult:
    n: int
    seed: int
    configuration: Optional[Configuration]
    method: str
    resamples: int = 0
    restarts: int = 0
    iterations: int = 0
    elapsed: float = 0.0
    squares: Optional[SquareSet] = None
    sample_stats: Optional[SampleStats] = None
    boundedness: Optional[BoundednessReport] = None
    gate_failures: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.configuration is not None

    def diagnostics(self) -> dict:
        out = {
            "n": self.n,
            "seed": self.seed,
            "method": self.method,
            "found": self.found,
            "resamples": self.resamples,
            "restarts": self.restarts,
            "iterations": self.iterations,
            "elapsed_s": round(self.elapsed, 3),
            "gate_failures": self.gate_failures,
        }
        if self.sample_stats is not None:
            out["sample"] = self.sample_stats.to_dict()
        if self.boundedness is not None:
            out["b"] = self.boundedness.b
        return out


def _check_output(c: Configuration, s: SquareSet) -> None:
    if not is_valid(c) or not slater_is_valid(to_slater(c)):
        raise AssertionError(f"pipeline produced an invalid configuration for n={c.n}")
    if not all(sq in s for sq in c.squares()):
        raise AssertionError("pipeline produced a queen outside the sampled set")


def build_configuration(
    n: int,
    seed: int = 0,
    max_iters: int = 200_000,
    time_limit: Optional[float] = 60.0,
    max_resamples: int = MAX_RESAMPLES,
    strict_gate: bool = False,
    exact_cutoff: int = EXACT_CUTOFF,
    params: SearchParams = SearchParams(),
) -> PipelineResult:
    """Construct a verified reflecting configuration of size n, or report failure.

    Each attempt samples S, rejects it if some row or column degree leaves
    the (1 +- n^(-1/4)) 5n/6 window, then runs the matcher.  With
    ``strict_gate`` a diagonal degree above 119n/144 also rejects S; that
    property only becomes likely for n in the tens of thousands, so it is
    recorded but not enforced by default.

    ``max_iters`` is the total matcher step budget across attempts and is
    what makes a run reproducible; ``time_limit`` is a wall-clock backstop.
    """
    n = check_size(n)
    start = time.perf_counter()
    if n <= exact_cutoff:
        c = exact.solve_first(n)
        res = PipelineResult(n, seed, c, "exact", squares=SquareSet.full(n))
        res.elapsed = time.perf_counter() - start
        return res

    res = PipelineResult(n, seed, None, "rainbow")
    for attempt in range(max_resamples + 1):
        res.resamples = attempt
        s = sample_subset(n, derive_seed(seed, attempt, 0))
        stats = check_subset(s, ab_trials=-1)
        res.squares, res.sample_stats = s, stats
        failures = []
        if not stats.rows_cols_ok:
            failures.append("rows_cols")
        if not stats.diagonals_ok:
            failures.append("diagonals")
        res.gate_failures = failures
        if "rows_cols" in failures or (strict_gate and failures):
            log.info("n=%d attempt %d: sample rejected (%s)", n, attempt, ", ".join(failures))
            continue

        g = build_graph(s)
        res.boundedness = verify_bounded(g)
        remaining_time = None
        if time_limit is not None:
            remaining_time = time_limit - (time.perf_counter() - start)
            if remaining_time <= 0:
                break
        search = SearchStats()
        m = find_rainbow_matching(
            g,
            seed=derive_seed(seed, attempt, 1),
            max_iters=max_iters - res.iterations,
            time_limit=remaining_time,
            params=params,
            stats=search,
        )
        res.iterations += search.iterations
        res.restarts += search.restarts
        if m is not None:
            c = m.to_configuration(n)
            _check_output(c, s)
            res.configuration = c
            break
        if res.iterations >= max_iters:
            break
        if time_limit is not None and time.perf_counter() - start >= time_limit:
            break
    res.elapsed = time.perf_counter() - start
    return res
