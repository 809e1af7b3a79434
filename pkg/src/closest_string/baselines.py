"""Reference methods: a WFC-style greedy heuristic and an exact enumerator.

The WFC routine is a reconstruction from a short prose description of the
original method, not a port of it.  Use it as a comparison point only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import CSPError, Instance, Solution, hamming_distance

__all__ = [
    "OracleResult",
    "InstanceTooLargeError",
    "wfc_solve",
    "brute_force_optimum",
    "pairwise_lower_bound",
]

DEFAULT_ENUMERATION_CAP = 10**7


class InstanceTooLargeError(CSPError):
    """The search space exceeds the enumeration cap."""


@dataclass(frozen=True)
class OracleResult:
    symbols: str | tuple
    distance: int
    examined: int


def wfc_solve(inst: Instance, rng_seed=None) -> Solution:
    """Greedy left-to-right construction steered by the farthest string.

    At each position the farthest string so far (ties broken at random)
    gets its own character if that character is among the most frequent at
    the position; otherwise a random most frequent character is used.
    """
    rng = np.random.default_rng(rng_seed)
    sol = np.empty(inst.length, dtype=np.uint8)
    dist = np.zeros(inst.n, dtype=np.int64)
    for pos in range(inst.length):
        farthest = np.flatnonzero(dist == dist.max())
        target = farthest[rng.integers(len(farthest))] if len(farthest) > 1 else farthest[0]
        counts = inst.freq[pos]
        top = np.flatnonzero(counts == counts.max())
        own = inst.codes[target, pos]
        if own in top:
            sol[pos] = own
        else:
            sol[pos] = top[rng.integers(len(top))] if len(top) > 1 else top[0]
        dist += inst.codes[:, pos] != sol[pos]
    return Solution(inst.decode(sol), int(dist.max()))


def pairwise_lower_bound(inst: Instance) -> int:
    """``ceil(max_{i<j} hd(s_i, s_j) / 2)``, a lower bound on the optimum."""
    worst = 0
    for i, j in combinations(range(inst.n), 2):
        worst = max(worst, hamming_distance(inst.codes[i], inst.codes[j]))
    return -(-worst // 2)


def brute_force_optimum(inst: Instance, cap: int = DEFAULT_ENUMERATION_CAP) -> OracleResult:
    """Exact optimum by depth-first enumeration with bound pruning.

    Returns the optimum that comes first in alphabet order.  Raises
    :class:`InstanceTooLargeError` when ``m ** L`` exceeds ``cap``.
    """
    n, length, m = inst.n, inst.length, inst.m
    if m**length > cap:
        raise InstanceTooLargeError(f"{m}^{length} candidates exceed the cap of {cap}")
    rows = [list(map(int, r)) for r in inst.codes]
    columns = [[rows[i][p] for i in range(n)] for p in range(length)]
    pairs = list(combinations(range(n), 2))
    # suffix_pair[p][k]: distance between the pair k's suffixes from position p
    suffix_pair = [[0] * len(pairs) for _ in range(length + 1)]
    for p in range(length - 1, -1, -1):
        col = columns[p]
        suffix_pair[p] = [
            suffix_pair[p + 1][k] + (col[i] != col[j]) for k, (i, j) in enumerate(pairs)
        ]

    best_dist = length + 1
    best: list[int] = []
    current = [0] * length
    examined = 0

    def bound(dist, pos):
        lb = max(dist)
        for k, (i, j) in enumerate(pairs):
            need = -(-(dist[i] + dist[j] + suffix_pair[pos][k]) // 2)
            if need > lb:
                lb = need
        return lb

    def visit(pos, dist):
        nonlocal best_dist, best, examined
        if pos == length:
            examined += 1
            d = max(dist)
            if d < best_dist:
                best_dist, best = d, current.copy()
            return
        col = columns[pos]
        for c in range(m):
            child = [d + (x != c) for d, x in zip(dist, col)]
            if bound(child, pos + 1) >= best_dist:
                continue
            current[pos] = c
            visit(pos + 1, child)

    visit(0, [0] * n)
    return OracleResult(inst.decode(best), best_dist, examined)
