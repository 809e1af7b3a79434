"""Time-restricted beam search over ranked alphabets.

The search builds solutions left to right.  Every round it extends each beam
node by every allowed symbol of the next level, keeps the ``beta`` best
children and then resizes ``beta`` from the ratio of remaining time to the
time the remaining rounds are expected to need.

Ordering of candidates is total and deterministic: EX descending, variance
of the prefix distances ascending, then the partial solution in alphabet
order.  Variances are only computed for EX values that are shared by more
than one candidate among those that can still be kept.

Internally the beam is a struct of arrays: an ``(B, n)`` matrix of prefix
match counts, the rank of every node in lexicographic order, and one
``(parent, symbol)`` array pair per level from which the final string is
read back.
"""

from __future__ import annotations

import logging
import math
import time
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass, field

import numpy as np

from .core import Instance, Solution
from .heuristic import BeamNode, extend_node, suffix_score_tables, variance_numerator
from .pruning import RankedAlphabet

__all__ = [
    "SolverConfig",
    "BeamRun",
    "default_t_max",
    "adjust_beta",
    "expand",
    "select_best",
    "trbs_search",
    "trbs_solve",
    "fixed_width_search",
]

logger = logging.getLogger(__name__)

GROW, SHRINK, SHRINK_CAP = 1.1, 0.9, 150
TIMING_MODES = ("wall", "virtual")
RANK_MODES = ("auto", "r1", "r2")

# history entries kept before dead lineages are pruned
_HISTORY_LIMIT = 4_000_000


def default_t_max(length: int) -> float:
    """Overall time limit in seconds for strings of the given length."""
    if length < 400:
        return 30.0
    if length < 1000:
        return 60.0
    return 120.0


@dataclass(frozen=True)
class SolverConfig:
    """Parameters of one three-stage solve.

    ``t_max=None`` picks the limit from :func:`default_t_max`.  In
    ``"virtual"`` timing every beam round costs ``virtual_level_seconds``
    (default: the beam budget divided by ``L``, which holds ``beta`` steady)
    and every local-search iteration costs ``virtual_ls_seconds``, so results
    do not depend on machine speed.
    """

    beta_initial: int = 300
    beta_trial: int = 15
    t_max: float | None = None
    ls_budget: float = 5.0
    rank_mode: str = "auto"
    seed: int | None = 0
    timing: str = "wall"
    virtual_level_seconds: float | None = None
    virtual_ls_seconds: float = 1e-3
    beta_max: int = 100_000

    def __post_init__(self):
        if self.beta_initial < 1 or self.beta_trial < 1:
            raise ValueError("beam widths must be >= 1")
        if self.t_max is not None and self.t_max <= 0:
            raise ValueError("t_max must be positive")
        if self.ls_budget < 0:
            raise ValueError("ls_budget must be >= 0")
        if self.rank_mode not in RANK_MODES:
            raise ValueError(f"rank_mode must be one of {RANK_MODES}")
        if self.timing not in TIMING_MODES:
            raise ValueError(f"timing must be one of {TIMING_MODES}")
        if self.beta_max < self.beta_initial:
            raise ValueError("beta_max must be >= beta_initial")

    def resolved_t_max(self, length: int) -> float:
        return self.t_max if self.t_max is not None else default_t_max(length)

    def beam_budget(self, length: int) -> float:
        return max(self.resolved_t_max(length) - self.ls_budget, 0.0)

    def to_dict(self) -> dict:
        return asdict(self)


def adjust_beta(beta: int, t_rem: float, t_iter: float, level: int, length: int) -> int:
    """New beam width after a round; ``level`` is the current partial length."""
    if beta < 1:
        raise ValueError("beta must be >= 1")
    if level >= length:
        raise ValueError("no rounds left to plan for")
    expected = t_iter * (length - level)
    ratio = math.inf if expected <= 0 else t_rem / expected
    if ratio >= GROW:
        beta = math.floor(beta * GROW)
    elif ratio <= SHRINK:
        beta = min(math.floor(beta / GROW), SHRINK_CAP)
    return max(beta, 1)


def _select(ex: np.ndarray, lexkey: np.ndarray, variance: Callable, beta: int) -> np.ndarray:
    """Indices of the ``beta`` best candidates, best first.

    ``variance(idx)`` must return integer variance keys for the candidates
    ``idx``; it is only called on EX values shared by several contenders.
    """
    if len(ex) == 0:
        raise ValueError("no candidates to select from")
    if len(ex) > beta:
        boundary = -np.partition(-ex, beta - 1)[beta - 1]
        contenders = np.flatnonzero(ex >= boundary)
    else:
        contenders = np.arange(len(ex))
    sub_ex = ex[contenders]
    _, inverse, counts = np.unique(sub_ex, return_inverse=True, return_counts=True)
    tied = counts[inverse] > 1
    var = np.zeros(len(contenders), dtype=np.int64)
    if tied.any():
        var[tied] = variance(contenders[tied])
    order = np.lexsort((lexkey[contenders], var, -sub_ex))
    return contenders[order[:beta]]


def expand(
    beam: Sequence[BeamNode], allowed, inst: Instance, tables: np.ndarray
) -> list[BeamNode]:
    """All children of ``beam`` over the symbol codes ``allowed``, duplicates removed."""
    seen = set()
    children = []
    for node in beam:
        for symbol in sorted({int(c) for c in allowed}):
            key = node.symbols + (symbol,)
            if key in seen:
                continue
            seen.add(key)
            children.append(extend_node(node, symbol, inst, tables))
    return children


def select_best(candidates: Sequence[BeamNode], beta: int) -> list[BeamNode]:
    """The ``beta`` best nodes by EX, then variance, then alphabet order."""
    if not candidates:
        raise ValueError("no candidates to select from")
    ex = np.array([c.ex for c in candidates], dtype=np.int64)
    by_symbols = sorted(range(len(candidates)), key=lambda i: candidates[i].symbols)
    lexkey = np.empty(len(candidates), dtype=np.int64)
    lexkey[by_symbols] = np.arange(len(candidates))

    def variance(idx):
        return [variance_numerator(candidates[i].distances) for i in idx]

    return [candidates[i] for i in _select(ex, lexkey, variance, beta)]


@dataclass
class BeamRun:
    """Outcome of one beam search."""

    codes: np.ndarray
    distance: int
    elapsed: float
    betas: list[int] = field(default_factory=list)


class _Clock:
    """Wall or virtual time source for one search."""

    def __init__(self, budget: float | None, virtual_step: float | None):
        self.budget = budget
        self.virtual_step = virtual_step
        self.start = time.perf_counter()
        self.virtual = 0.0

    def elapsed(self) -> float:
        if self.virtual_step is not None:
            return self.virtual
        return time.perf_counter() - self.start

    def tick(self):
        if self.virtual_step is not None:
            self.virtual += self.virtual_step

    def remaining(self) -> float:
        return math.inf if self.budget is None else self.budget - self.elapsed()


def _compact(history: list) -> None:
    """Drop history entries that no node of the current beam descends from."""
    live = np.arange(len(history[-1][0]))
    for k in range(len(history) - 1, -1, -1):
        parent, symbol = history[k]
        parent, symbol = parent[live], symbol[live]
        if k > 0:
            live = np.unique(parent)
            parent = np.searchsorted(live, parent).astype(np.int32)
        history[k] = (parent, symbol)


def _beam_search(
    inst: Instance,
    allowed: Sequence[np.ndarray],
    tables: np.ndarray,
    beta: int,
    clock: _Clock,
    *,
    adapt: bool,
    beta_max: int,
) -> BeamRun:
    n, length, m = inst.n, inst.length, inst.m
    matches = np.zeros((1, n), dtype=np.int32)
    lexrank = np.zeros(1, dtype=np.int64)
    ex = np.zeros(1, dtype=np.int64)
    history: list[tuple[np.ndarray, np.ndarray]] = []
    stored = 0
    betas = [beta]

    for level in range(length):
        t0 = time.perf_counter()
        symbols = np.asarray(allowed[level], dtype=np.uint8)
        k = len(symbols)
        hits = (inst.codes[:, level][None, :] == symbols[:, None]).astype(np.int32)
        children = (matches[:, None, :] + hits[None, :, :]).reshape(-1, n)
        ex = (children + tables[:, level + 1]).min(axis=1).astype(np.int64)
        lexkey = (lexrank[:, None] * m + symbols[None, :].astype(np.int64)).ravel()
        depth = level + 1

        def variance(idx, children=children, depth=depth):
            d = (depth - children[idx]).astype(np.int64)
            return n * np.einsum("ij,ij->i", d, d) - d.sum(axis=1) ** 2

        keep = _select(ex, lexkey, variance, beta)
        parents = (keep // k).astype(np.int32)
        history.append((parents, symbols[keep % k]))
        stored += len(keep)
        matches = children[keep]
        ex = ex[keep]
        lexrank = np.argsort(np.argsort(lexkey[keep], kind="stable"), kind="stable")
        if stored > _HISTORY_LIMIT:
            _compact(history)
            stored = sum(len(p) for p, _ in history)

        clock.tick()
        if depth < length:
            if clock.virtual_step is not None:
                t_iter = clock.virtual_step
            else:
                t_iter = time.perf_counter() - t0
            t_rem = clock.remaining()
            if t_rem <= 0:
                # out of time: finish greedily
                beta = 1
            elif adapt:
                beta = min(adjust_beta(beta, t_rem, t_iter, depth, length), beta_max)
            betas.append(beta)

    best = np.flatnonzero(ex == ex.max())
    idx = int(best[np.argmin(lexrank[best])])
    codes = np.empty(length, dtype=np.uint8)
    for level in range(length - 1, -1, -1):
        parents, symbols = history[level]
        codes[level] = symbols[idx]
        idx = int(parents[idx])
    return BeamRun(codes, int(length - ex.max()), clock.elapsed(), betas)


def trbs_search(
    inst: Instance,
    ranked: RankedAlphabet,
    cfg: SolverConfig,
    budget: float | None = None,
    tables: np.ndarray | None = None,
) -> BeamRun:
    """Time-restricted beam search with ``cfg.beta_initial`` as starting width.

    ``budget`` defaults to ``cfg.t_max`` minus the local-search reserve.
    """
    if budget is None:
        budget = cfg.beam_budget(inst.length)
    if tables is None:
        tables = suffix_score_tables(inst)
    step = None
    if cfg.timing == "virtual":
        step = cfg.virtual_level_seconds
        if step is None:
            step = budget / inst.length if budget > 0 else 0.0
    clock = _Clock(budget, step)
    run = _beam_search(
        inst, ranked.allowed, tables, cfg.beta_initial, clock,
        adapt=True, beta_max=cfg.beta_max,
    )
    logger.debug("trbs: distance %d, final beta %d", run.distance, run.betas[-1])
    return run


def trbs_solve(
    inst: Instance, ranked: RankedAlphabet, cfg: SolverConfig, budget: float | None = None
) -> Solution:
    run = trbs_search(inst, ranked, cfg, budget)
    return Solution(inst.decode(run.codes), run.distance)


def fixed_width_search(
    inst: Instance,
    ranked: RankedAlphabet,
    beta: int,
    time_limit: float | None = None,
    tables: np.ndarray | None = None,
) -> tuple[np.ndarray, int]:
    """Plain beam search of constant width; width drops to 1 past ``time_limit``."""
    if tables is None:
        tables = suffix_score_tables(inst)
    clock = _Clock(time_limit, None)
    run = _beam_search(inst, ranked.allowed, tables, beta, clock, adapt=False, beta_max=beta)
    return run.codes, run.distance
