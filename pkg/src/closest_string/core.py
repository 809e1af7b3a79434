"""Instances, solutions and Hamming-distance primitives.

Symbols are stored as dense integer codes (the index of the symbol in the
instance's ordered alphabet).  Text only appears at the I/O boundary, via
:meth:`Instance.encode` and :meth:`Instance.decode`.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "CSPError",
    "LengthMismatchError",
    "SymbolError",
    "Instance",
    "Solution",
    "hamming_distance",
    "complement_matches",
    "hamming_to_set",
    "distance_vector",
    "level_frequencies",
]

CODE_DTYPE = np.uint8


class CSPError(ValueError):
    """Base class for invalid input to the solver library."""


class LengthMismatchError(CSPError):
    """Two sequences that must have equal length do not."""


class SymbolError(CSPError):
    """A symbol is not a member of the alphabet in use."""


def _as_array(seq) -> np.ndarray:
    if isinstance(seq, np.ndarray):
        return seq
    if isinstance(seq, str):
        return np.frombuffer(seq.encode("utf-32-le"), dtype=np.uint32)
    return np.asarray(list(seq))


def hamming_distance(a: Sequence, b: Sequence) -> int:
    """Number of positions at which ``a`` and ``b`` differ."""
    if len(a) != len(b):
        raise LengthMismatchError(f"lengths differ: {len(a)} != {len(b)}")
    if len(a) == 0:
        return 0
    return int(np.count_nonzero(_as_array(a) != _as_array(b)))


def complement_matches(a: Sequence, b: Sequence) -> int:
    """Number of positions at which ``a`` and ``b`` agree."""
    return len(a) - hamming_distance(a, b)


@dataclass(frozen=True, eq=False)
class Instance:
    """A closest-string instance: ``n`` strings of length ``L`` over an alphabet.

    Build one with :meth:`from_strings`.  ``codes`` is an ``(n, L)`` array of
    alphabet indices and ``freq[l, c]`` counts how often symbol ``c`` occurs
    at level ``l`` (0-based).  Both arrays are read-only.
    """

    alphabet: tuple[Hashable, ...]
    codes: np.ndarray
    freq: np.ndarray = field(repr=False)

    @classmethod
    def from_strings(
        cls,
        strings: Iterable[Sequence[Hashable]],
        alphabet: Iterable[Hashable] | None = None,
    ) -> Instance:
        strings = [tuple(s) for s in strings]
        if not strings:
            raise CSPError("an instance needs at least one string")
        length = len(strings[0])
        if length == 0:
            raise CSPError("strings must have length >= 1")
        for i, s in enumerate(strings):
            if len(s) != length:
                raise LengthMismatchError(
                    f"string {i} has length {len(s)}, expected {length}"
                )
        if alphabet is None:
            alphabet = sorted({c for s in strings for c in s})
        alphabet = tuple(alphabet)
        if not alphabet:
            raise CSPError("alphabet is empty")
        if len(set(alphabet)) != len(alphabet):
            raise CSPError("alphabet contains duplicate symbols")
        if len(alphabet) > np.iinfo(CODE_DTYPE).max + 1:
            raise CSPError(f"alphabet too large ({len(alphabet)} symbols)")
        index = {c: k for k, c in enumerate(alphabet)}
        codes = np.empty((len(strings), length), dtype=CODE_DTYPE)
        for i, s in enumerate(strings):
            for j, c in enumerate(s):
                try:
                    codes[i, j] = index[c]
                except KeyError:
                    raise SymbolError(
                        f"symbol {c!r} at string {i}, position {j} "
                        "is not in the alphabet"
                    ) from None
        return cls.from_codes(codes, alphabet)

    @classmethod
    def from_codes(cls, codes, alphabet: Iterable[Hashable]) -> Instance:
        alphabet = tuple(alphabet)
        codes = np.array(codes, dtype=CODE_DTYPE, copy=True)
        if codes.ndim != 2 or codes.shape[0] < 1 or codes.shape[1] < 1:
            raise CSPError("codes must be a non-empty (n, L) array")
        if codes.max() >= len(alphabet):
            raise SymbolError("code outside the alphabet")
        n, length = codes.shape
        freq = np.zeros((length, len(alphabet)), dtype=np.int64)
        np.add.at(freq, (np.broadcast_to(np.arange(length), (n, length)), codes), 1)
        codes.setflags(write=False)
        freq.setflags(write=False)
        return cls(alphabet, codes, freq)

    @property
    def n(self) -> int:
        return self.codes.shape[0]

    @property
    def length(self) -> int:
        return self.codes.shape[1]

    @property
    def m(self) -> int:
        return len(self.alphabet)

    @property
    def strings(self) -> list[str]:
        return [self.decode(row) for row in self.codes]

    def encode(self, seq: Sequence[Hashable]) -> np.ndarray:
        """Map a symbol sequence to an array of alphabet codes."""
        if isinstance(seq, np.ndarray) and seq.dtype.kind in "ui":
            if seq.size and seq.max() >= self.m:
                raise SymbolError("code outside the alphabet")
            return seq.astype(CODE_DTYPE, copy=False)
        index = {c: k for k, c in enumerate(self.alphabet)}
        try:
            return np.fromiter((index[c] for c in seq), dtype=CODE_DTYPE, count=len(seq))
        except KeyError as exc:
            raise SymbolError(f"symbol {exc.args[0]!r} is not in the alphabet") from None

    def decode(self, codes) -> str | tuple:
        symbols = [self.alphabet[int(c)] for c in codes]
        if all(isinstance(c, str) and len(c) == 1 for c in self.alphabet):
            return "".join(symbols)
        return tuple(symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.codes, other.codes)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.codes.tobytes(), self.codes.shape))


@dataclass(frozen=True)
class Solution:
    """A complete candidate string and its distance to the instance."""

    symbols: str | tuple
    distance: int

    @classmethod
    def evaluate(cls, symbols, inst: Instance) -> Solution:
        codes = inst.encode(symbols)
        if len(codes) != inst.length:
            raise LengthMismatchError(
                f"solution has length {len(codes)}, expected {inst.length}"
            )
        return cls(inst.decode(codes), hamming_to_set(codes, inst))

    def __str__(self) -> str:
        return self.symbols if isinstance(self.symbols, str) else " ".join(map(str, self.symbols))


def distance_vector(x, inst: Instance) -> np.ndarray:
    """Per-string distances between ``x`` and the ``len(x)``-prefixes of ``inst``."""
    codes = inst.encode(x)
    lp = len(codes)
    if lp > inst.length:
        raise LengthMismatchError(f"prefix length {lp} exceeds L={inst.length}")
    return np.count_nonzero(inst.codes[:, :lp] != codes, axis=1)


def hamming_to_set(x, inst: Instance) -> int:
    """Maximum distance from ``x`` to the equally long prefixes of every string."""
    if len(x) == 0:
        return 0
    return int(distance_vector(x, inst).max())


def level_frequencies(inst: Instance, level: int) -> dict[Hashable, int]:
    """Symbol counts at 0-based ``level``; absent symbols map to 0."""
    if not 0 <= level < inst.length:
        raise IndexError(f"level {level} outside 0..{inst.length - 1}")
    return {c: int(k) for c, k in zip(inst.alphabet, inst.freq[level])}
