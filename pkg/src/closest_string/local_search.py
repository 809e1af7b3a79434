"""Peak-flattening local search.

Each iteration looks at the critical strings (those at the current maximum
distance) and proposes single-position substitutions that copy a critical
string's character at the level(s) where that character is most common in
the whole instance.  The first proposal, in shuffled order, that does not
increase the maximum distance is taken.  Sideways moves are allowed, so the
search only stops when no proposal qualifies or the budget runs out.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from .core import Instance, LengthMismatchError, Solution

__all__ = ["RepairCandidate", "find_critical_strings", "repair_candidates", "local_search"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepairCandidate:
    position: int
    symbol: int
    source: int


def _own_frequencies(inst: Instance) -> np.ndarray:
    # own[i, l] = f_l(s_i[l])
    return inst.freq[np.arange(inst.length)[None, :], inst.codes]


def find_critical_strings(sol, inst: Instance) -> np.ndarray:
    """Indices of the strings farthest from ``sol``."""
    codes = inst.encode(sol)
    if len(codes) != inst.length:
        raise LengthMismatchError("solution must have length L")
    dist = np.count_nonzero(inst.codes != codes, axis=1)
    return np.flatnonzero(dist == dist.max())


def repair_candidates(
    critical, sol, inst: Instance, rng=None, own: np.ndarray | None = None
) -> list[RepairCandidate]:
    """Substitutions proposed by the critical strings, shuffled with ``rng``.

    For each critical string only positions where it disagrees with ``sol``
    are considered; among those, every position whose character has the
    highest instance-wide frequency yields a candidate.  Identical
    (position, symbol) proposals from different strings are merged.
    """
    codes = inst.encode(sol)
    if own is None:
        own = _own_frequencies(inst)
    rng = np.random.default_rng(rng)
    seen: dict[tuple[int, int], RepairCandidate] = {}
    for c in np.asarray(critical, dtype=np.intp):
        differs = np.flatnonzero(inst.codes[c] != codes)
        if differs.size == 0:
            continue
        freq = own[c, differs]
        for pos in differs[freq == freq.max()]:
            key = (int(pos), int(inst.codes[c, pos]))
            seen.setdefault(key, RepairCandidate(key[0], key[1], int(c)))
    candidates = [seen[k] for k in sorted(seen)]
    return [candidates[i] for i in rng.permutation(len(candidates))]


def local_search(
    init,
    inst: Instance,
    budget: float | None = 5.0,
    rng_seed=None,
    *,
    max_iterations: int | None = None,
    trace: list | None = None,
) -> Solution:
    """Improve ``init`` until no move qualifies or the budget is spent.

    ``budget`` is in wall-clock seconds (``None`` for no limit) and
    ``max_iterations`` caps the number of iterations; at least one of the
    two should be finite since sideways moves can cycle.  Accepted moves are
    appended to ``trace`` as ``(position, symbol_code, distance)``.
    """
    sol = inst.encode(init).copy()
    if len(sol) != inst.length:
        raise LengthMismatchError("initial solution must have length L")
    rng = np.random.default_rng(rng_seed)
    own = _own_frequencies(inst)
    dist = np.count_nonzero(inst.codes != sol, axis=1)
    best = int(dist.max())
    deadline = None if budget is None else time.perf_counter() + budget
    iterations = 0

    while deadline is None or time.perf_counter() < deadline:
        if max_iterations is not None and iterations >= max_iterations:
            break
        iterations += 1
        critical = np.flatnonzero(dist == best)
        moved = False
        for cand in repair_candidates(critical, sol, inst, rng, own):
            column = inst.codes[:, cand.position]
            trial = dist - (column != sol[cand.position]) + (column != cand.symbol)
            trial_max = int(trial.max())
            if trial_max <= best:
                sol[cand.position] = cand.symbol
                dist, best = trial, trial_max
                moved = True
                if trace is not None:
                    trace.append((cand.position, cand.symbol, best))
                break
        if not moved:
            break

    logger.debug("local search: %d iterations, distance %d", iterations, best)
    return Solution(inst.decode(sol), best)
