"""Per-level alphabet pruning by frequency rank.

Rank 1 at a level is the set of symbols with the highest count there; rank 2
adds every symbol holding the second-highest distinct positive count.  The
solver restricts beam expansion to one of the two ranks, chosen by a pair of
cheap trial searches.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .core import Instance

__all__ = ["RankSets", "RankedAlphabet", "rank_sets", "rank_identify", "ranked_alphabet"]

logger = logging.getLogger(__name__)

RANKS = ("r1", "r2")


@dataclass(frozen=True)
class RankSets:
    """Sorted symbol codes per level for rank 1 (``r1``) and rank 2 (``r2``)."""

    r1: tuple[np.ndarray, ...]
    r2: tuple[np.ndarray, ...]

    def symbols(self, inst: Instance, rank: str, level: int) -> set:
        codes = getattr(self, rank)[level]
        return {inst.alphabet[c] for c in codes}


@dataclass(frozen=True)
class RankedAlphabet:
    """The per-level symbol codes the beam search may append.

    ``trial_distances`` holds the distances of the two trial searches when the
    rank was picked by :func:`rank_identify`.
    """

    allowed: tuple[np.ndarray, ...]
    chosen_rank: str
    trial_distances: dict[str, int] | None = None


def rank_sets(inst: Instance) -> RankSets:
    r1, r2 = [], []
    for counts in inst.freq:
        distinct = np.unique(counts[counts > 0])[::-1]
        top = distinct[0]
        r1.append(np.flatnonzero(counts == top))
        if len(distinct) > 1:
            r2.append(np.flatnonzero(counts >= distinct[1]))
        else:
            r2.append(r1[-1])
    return RankSets(tuple(r1), tuple(r2))


def ranked_alphabet(inst: Instance, rank: str, sets: RankSets | None = None) -> RankedAlphabet:
    """Restrict every level of ``inst`` to the given rank (``"r1"`` or ``"r2"``)."""
    if rank not in RANKS:
        raise ValueError(f"rank must be one of {RANKS}, got {rank!r}")
    sets = sets if sets is not None else rank_sets(inst)
    return RankedAlphabet(getattr(sets, rank), rank)


def rank_identify(
    inst: Instance,
    beta_t: int = 15,
    budget: float = 30.0,
    rng_seed=None,
    *,
    timing: str = "wall",
) -> RankedAlphabet:
    """Pick rank 1 or rank 2 by running a width-``beta_t`` beam search with each.

    Each trial is a fixed-width search (no local search) with a deadline of
    ``budget / 4`` seconds.  The rank giving the smaller distance wins; equal
    distances are settled by a coin flip drawn from ``rng_seed``.
    """
    from .beam import fixed_width_search

    if beta_t < 1:
        raise ValueError("beta_t must be >= 1")
    sets = rank_sets(inst)
    deadline = None if timing == "virtual" else budget / 4
    distances = {}
    for rank in RANKS:
        candidate = ranked_alphabet(inst, rank, sets)
        _, distances[rank] = fixed_width_search(inst, candidate, beta_t, time_limit=deadline)
    if distances["r1"] < distances["r2"]:
        rank = "r1"
    elif distances["r2"] < distances["r1"]:
        rank = "r2"
    else:
        rank = RANKS[np.random.default_rng(rng_seed).integers(2)]
    logger.debug("rank trials %s -> %s", distances, rank)
    return RankedAlphabet(getattr(sets, rank), rank, distances)
