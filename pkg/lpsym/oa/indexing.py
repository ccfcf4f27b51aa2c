"""
< Frequency-vector indexing of runs >
A run (i_1, …, i_k) over symbols 0..s−1 has index Σ_j i_j·s^(k−1−j) (0-based, first column
most significant). A frequency vector counts how often each of the s^k possible runs occurs
in an array; row order inside the array is irrelevant to it.

For two-level arrays the signed coding maps level 0 to +1 and level 1 to −1.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from lpsym.exceptions import LevelOutOfRange

Run = tuple[int, ...]


def freq_index(levels: Sequence[int], s: int) -> int:
    """
    Raises
    ------
    LevelOutOfRange
        If a level lies outside 0..s−1.
    """
    index = 0
    for level in levels:
        if not 0 <= level < s:
            raise LevelOutOfRange(f'Level {level} is outside 0..{s - 1}.')
        index = index * s + level
    return index


def index_levels(index: int, s: int, k: int) -> Run:
    if not 0 <= index < s**k:
        raise LevelOutOfRange(f'Index {index} is outside 0..{s**k - 1}.')
    levels = [0] * k
    for j in reversed(range(k)):
        index, levels[j] = divmod(index, s)
    return tuple(levels)


def all_runs(k: int, s: int) -> list[Run]:
    """Every run in index order."""
    return [index_levels(i, s, k) for i in range(s**k)]


@dataclass(frozen=True)
class FrequencyVector:
    counts: tuple[int, ...]
    k: int
    s: int

    def __post_init__(self) -> None:
        if len(self.counts) != self.s**self.k:
            raise ValueError(f'Expected {self.s**self.k} counts, got {len(self.counts)}.')
        if any(c < 0 for c in self.counts):
            raise ValueError('Counts must be non-negative.')

    @property
    def N(self) -> int:
        return sum(self.counts)

    def rows(self) -> list[Run]:
        """The array with runs in index order, each repeated by its count."""
        out: list[Run] = []
        for index, count in enumerate(self.counts):
            if count:
                out.extend([index_levels(index, self.s, self.k)] * count)
        return out

    def to_text(self) -> str:
        return ' '.join(str(c) for c in self.counts)


def frequency_vector(rows: Iterable[Sequence[int]], s: int, k: int | None = None) -> FrequencyVector:
    materialized = [tuple(r) for r in rows]
    if k is None:
        if not materialized:
            raise ValueError('Factor count is required for an empty array.')
        k = len(materialized[0])
    counts = [0] * s**k
    for run in materialized:
        if len(run) != k:
            raise ValueError(f'Run {run} does not have {k} columns.')
        counts[freq_index(run, s)] += 1
    return FrequencyVector(tuple(counts), k, s)


@dataclass(frozen=True)
class SignedArray:
    """An N×k array over {−1, +1}."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError('All rows must have the same length.')
        if any(v not in (-1, 1) for row in self.entries for v in row):
            raise ValueError('Entries must be -1 or +1.')

    @classmethod
    def from_levels(cls, rows: Iterable[Sequence[int]]) -> SignedArray:
        signed = []
        for row in rows:
            if any(level not in (0, 1) for level in row):
                raise LevelOutOfRange('Signed coding needs two-level rows.')
            signed.append(tuple(1 - 2 * level for level in row))
        return cls(tuple(signed))

    def to_levels(self) -> list[Run]:
        return [tuple((1 - v) // 2 for v in row) for row in self.entries]

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def k(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)


def parse_array(text: str) -> list[Run]:
    """Whitespace-separated symbol matrix, one run per line; blank lines and `#` comments skipped."""
    rows: list[Run] = []
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            rows.append(tuple(int(tok) for tok in line.split()))
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ValueError(f'Rows of differing widths: {sorted(widths)}.')
    return rows


def format_array(rows: Iterable[Sequence[int]]) -> str:
    return ''.join(' '.join(str(v) for v in row) + '\n' for row in rows)
