"""Expected-distance node evaluation for the beam search.

A partial solution ``x`` of length ``lp`` is scored by

    EX(x) = min_i ( matches(x, s_i[:lp]) + score_i[lp] )

where ``score_i[p]`` counts positions ``q >= p`` at which the consensus
string (most frequent symbol per level) agrees with ``s_i``.  Larger is
better.  Ties are broken by the sample variance of the per-string prefix
distances, smaller first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import Instance, LengthMismatchError

__all__ = [
    "BeamNode",
    "expected_solution",
    "suffix_score_tables",
    "ex_score",
    "variance_score",
    "variance_numerator",
    "extend_node",
]


def expected_solution(inst: Instance) -> np.ndarray:
    """Most frequent symbol code at every level; ties go to the smallest code."""
    # argmax returns the first maximum, i.e. the earliest symbol in alphabet order
    return np.argmax(inst.freq, axis=1).astype(inst.codes.dtype)


def suffix_score_tables(inst: Instance, expected=None) -> np.ndarray:
    """``(n, L + 1)`` table of suffix match counts against ``expected``.

    Column ``p`` counts matches over positions ``p .. L-1``; column ``L`` is 0.
    """
    if expected is None:
        expected = expected_solution(inst)
    expected = inst.encode(expected)
    if len(expected) != inst.length:
        raise LengthMismatchError("expected solution must have length L")
    matches = (inst.codes == expected).astype(np.int32)
    tables = np.zeros((inst.n, inst.length + 1), dtype=np.int32)
    tables[:, :-1] = np.cumsum(matches[:, ::-1], axis=1)[:, ::-1]
    return tables


def variance_numerator(distances) -> int:
    """``n * sum(d^2) - sum(d)^2``; equals ``n (n-1) Var`` exactly."""
    d = np.asarray(distances, dtype=np.int64)
    return int(d.size * np.dot(d, d) - d.sum() ** 2)


@dataclass(eq=False)
class BeamNode:
    """A partial solution with its per-string prefix match counts."""

    symbols: tuple[int, ...]
    matches: np.ndarray
    ex: int
    _variance: Fraction | None = field(default=None, repr=False)

    @classmethod
    def root(cls, tables: np.ndarray) -> BeamNode:
        matches = np.zeros(tables.shape[0], dtype=np.int32)
        return cls((), matches, int(tables[:, 0].min()))

    @property
    def length(self) -> int:
        return len(self.symbols)

    @property
    def distances(self) -> np.ndarray:
        return self.length - self.matches

    @property
    def variance(self) -> Fraction:
        if self._variance is None:
            self._variance = variance_score(self)
        return self._variance


def ex_score(node: BeamNode, tables: np.ndarray) -> int:
    return int((node.matches + tables[:, node.length]).min())


def variance_score(node: BeamNode) -> Fraction:
    """Sample variance of the node's per-string distances (0 for one string)."""
    n = node.matches.size
    if n < 2:
        return Fraction(0)
    return Fraction(variance_numerator(node.distances), n * (n - 1))


def extend_node(node: BeamNode, symbol: int, inst: Instance, tables: np.ndarray) -> BeamNode:
    """Child of ``node`` obtained by appending the symbol code ``symbol``."""
    level = node.length
    if level >= inst.length:
        raise ValueError("cannot extend a complete node")
    if not 0 <= symbol < inst.m:
        raise ValueError(f"symbol code {symbol} outside the alphabet")
    matches = node.matches + (inst.codes[:, level] == symbol)
    child = BeamNode(node.symbols + (int(symbol),), matches, 0)
    child.ex = ex_score(child, tables)
    return child
