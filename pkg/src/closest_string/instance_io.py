"""Reading, writing and generating instances.

Two text formats are supported:

* plain: one string per line; blank lines and ``#`` comments are skipped.
  A comment of the form ``# alphabet: ACGT`` declares the alphabet.
* FASTA: ``>`` header lines, each followed by a sequence that may wrap.

Declared DNA and protein alphabets are matched case-insensitively and the
sequences are upper-cased.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import CSPError, Instance

__all__ = [
    "ALPHABETS",
    "InstanceFormatError",
    "GeneratorSpec",
    "parse_plain",
    "parse_fasta",
    "format_plain",
    "format_fasta",
    "read_instance",
    "write_instance",
    "generate_uniform",
]

ALPHABETS = {
    "dna": "ACGT",
    "protein": "ACDEFGHIKLMNPQRSTVWY",
}

_ALPHABET_DIRECTIVE = re.compile(r"#\s*alphabet\s*:\s*(\S+)\s*$", re.IGNORECASE)


class InstanceFormatError(CSPError):
    """Malformed instance text."""


def _resolve_alphabet(alphabet) -> tuple[tuple[str, ...] | None, bool]:
    """Return (symbols, upper-case input) for an alphabet name or symbol list."""
    if alphabet is None:
        return None, False
    if isinstance(alphabet, str) and alphabet.lower() in ALPHABETS:
        return tuple(ALPHABETS[alphabet.lower()]), True
    return tuple(alphabet), False


def _build(records: list[tuple[int, str]], alphabet, what: str) -> Instance:
    """``records`` are (line number, sequence) pairs."""
    if not records:
        raise InstanceFormatError(f"no {what} found")
    symbols, upper = _resolve_alphabet(alphabet)
    if upper:
        records = [(line, seq.upper()) for line, seq in records]
    length = len(records[0][1])
    for line, seq in records:
        if len(seq) == 0:
            raise InstanceFormatError(f"empty {what[:-1]} at line {line}")
        if len(seq) != length:
            raise InstanceFormatError(
                f"line {line}: length {len(seq)} differs from first length {length}"
            )
    if symbols is not None:
        allowed = set(symbols)
        for line, seq in records:
            for pos, c in enumerate(seq):
                if c not in allowed:
                    raise InstanceFormatError(
                        f"line {line}, position {pos + 1}: symbol {c!r} not in alphabet"
                    )
    return Instance.from_strings([seq for _, seq in records], symbols)


def parse_plain(text: str, alphabet=None) -> Instance:
    records = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            found = _ALPHABET_DIRECTIVE.match(line)
            if found and alphabet is None:
                alphabet = found.group(1)
            continue
        records.append((number, line))
    return _build(records, alphabet, "strings")


def parse_fasta(text: str, alphabet=None) -> Instance:
    records: list[tuple[int, str]] = []
    chunks: list[str] | None = None
    header_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(";"):
            continue
        if line.startswith(">"):
            if chunks is not None:
                records.append((header_line, "".join(chunks)))
            chunks, header_line = [], number
            continue
        if chunks is None:
            raise InstanceFormatError(f"line {number}: sequence data before first header")
        chunks.append(line)
    if chunks is not None:
        records.append((header_line, "".join(chunks)))
    return _build(records, alphabet, "records")


def _alphabet_label(inst: Instance) -> str:
    return "".join(inst.alphabet)


def format_plain(inst: Instance) -> str:
    lines = [f"# alphabet: {_alphabet_label(inst)}"]
    lines += inst.strings
    return "\n".join(lines) + "\n"


def format_fasta(inst: Instance, width: int = 60, names=None) -> str:
    names = names or [f"s{i + 1}" for i in range(inst.n)]
    out = []
    for name, seq in zip(names, inst.strings):
        out.append(f">{name}")
        out += [seq[k:k + width] for k in range(0, len(seq), width)]
    return "\n".join(out) + "\n"


def _is_fasta(path: Path) -> bool:
    return path.suffix.lower() in {".fa", ".fasta", ".fna", ".faa"}


def read_instance(path: str | os.PathLike, alphabet=None) -> Instance:
    """Read a plain or FASTA file; FASTA is detected by extension or a leading '>'."""
    path = Path(path)
    text = path.read_text()
    if _is_fasta(path) or text.lstrip().startswith(">"):
        return parse_fasta(text, alphabet)
    return parse_plain(text, alphabet)


def write_instance(inst: Instance, path: str | os.PathLike) -> None:
    path = Path(path)
    text = format_fasta(inst) if _is_fasta(path) else format_plain(inst)
    path.write_text(text)


@dataclass(frozen=True)
class GeneratorSpec:
    """Size of a uniform random instance.

    ``alphabet`` is ``"dna"``, ``"protein"``, an integer size (4 and 20 map
    to DNA and protein; other sizes use ``A``, ``B``, ...) or a symbol list.
    """

    n: int
    length: int
    alphabet: object = "dna"
    seed: int | None = 0

    def __post_init__(self):
        if self.n < 1 or self.length < 1:
            raise ValueError("n and length must be >= 1")
        if len(self.symbols()) < 2:
            raise ValueError("alphabet needs at least 2 symbols")

    def symbols(self) -> tuple[str, ...]:
        a = self.alphabet
        if isinstance(a, (int, np.integer)):
            if a == 4:
                return tuple(ALPHABETS["dna"])
            if a == 20:
                return tuple(ALPHABETS["protein"])
            if not 2 <= a <= 26:
                raise ValueError("integer alphabet sizes must be in 2..26")
            return tuple(chr(ord("A") + k) for k in range(a))
        if isinstance(a, str) and a.lower() in ALPHABETS:
            return tuple(ALPHABETS[a.lower()])
        return tuple(a)


def generate_uniform(spec: GeneratorSpec) -> Instance:
    """Every symbol drawn independently and uniformly, reproducibly per seed."""
    symbols = spec.symbols()
    rng = np.random.default_rng(spec.seed)
    codes = rng.integers(0, len(symbols), size=(spec.n, spec.length))
    return Instance.from_codes(codes, symbols)
