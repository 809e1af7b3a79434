"""The three-stage solver: rank pruning, beam search, local search."""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .beam import SolverConfig, trbs_search
from .core import Instance, Solution
from .heuristic import suffix_score_tables
from .local_search import local_search
from .pruning import RankedAlphabet, rank_identify, ranked_alphabet

__all__ = ["SolveReport", "tsa_solve", "stage_seeds"]

logger = logging.getLogger(__name__)


@dataclass
class SolveReport:
    """Result of :func:`tsa_solve`.

    ``timings`` maps ``prune``, ``beam`` and ``local`` to seconds; in virtual
    timing mode these are virtual seconds (the rank trials are not metered
    and report 0).
    """

    solution: Solution
    beam_distance: int
    chosen_rank: str
    trial_distances: dict[str, int] | None
    timings: dict[str, float]
    seed: int | None
    config: dict
    betas: list[int] = field(default_factory=list, repr=False)

    @property
    def distance(self) -> int:
        return self.solution.distance

    def summary_lines(self) -> list[str]:
        t = self.timings
        return [
            f"solution: {self.solution}",
            f"distance: {self.distance}",
            f"beam_distance: {self.beam_distance}",
            f"rank: {self.chosen_rank}",
            f"timing: prune={t['prune']:.3f}s beam={t['beam']:.3f}s local={t['local']:.3f}s",
        ]


def stage_seeds(seed) -> tuple[np.random.SeedSequence, np.random.SeedSequence]:
    """Independent seed streams for the rank coin flip and the local search."""
    rank_ss, ls_ss = np.random.SeedSequence(seed).spawn(2)
    return rank_ss, ls_ss


def tsa_solve(inst: Instance, cfg: SolverConfig | None = None) -> SolveReport:
    cfg = cfg or SolverConfig()
    virtual = cfg.timing == "virtual"
    t_max = cfg.resolved_t_max(inst.length)
    beam_budget = cfg.beam_budget(inst.length)
    rank_ss, ls_ss = stage_seeds(cfg.seed)
    start = time.perf_counter()

    if cfg.rank_mode == "auto":
        ranked: RankedAlphabet = rank_identify(
            inst, cfg.beta_trial, beam_budget, rank_ss, timing=cfg.timing
        )
    else:
        ranked = ranked_alphabet(inst, cfg.rank_mode)
    prune_time = 0.0 if virtual else time.perf_counter() - start

    tables = suffix_score_tables(inst)
    if not virtual:
        beam_budget = max(t_max - cfg.ls_budget - (time.perf_counter() - start), 0.0)
    run = trbs_search(inst, ranked, cfg, beam_budget, tables)

    if virtual:
        iterations = math.ceil(cfg.ls_budget / cfg.virtual_ls_seconds) if cfg.ls_budget else 0
        trace: list = []
        improved = local_search(
            run.codes, inst, None, ls_ss, max_iterations=iterations, trace=trace
        )
        # every iteration but the last either moves or ends the search
        used = min(len(trace) + 1, iterations)
        local_time = used * cfg.virtual_ls_seconds
    else:
        t0 = time.perf_counter()
        remaining = t_max - (t0 - start)
        improved = local_search(run.codes, inst, max(min(cfg.ls_budget, remaining), 0.0), ls_ss)
        local_time = time.perf_counter() - t0

    logger.info(
        "tsa: rank %s, beam %d -> local %d", ranked.chosen_rank, run.distance, improved.distance
    )
    return SolveReport(
        solution=improved,
        beam_distance=run.distance,
        chosen_rank=ranked.chosen_rank,
        trial_distances=ranked.trial_distances,
        timings={"prune": prune_time, "beam": run.elapsed, "local": local_time},
        seed=cfg.seed,
        config=cfg.to_dict() | {"t_max": t_max},
        betas=run.betas,
    )
