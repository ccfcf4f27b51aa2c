from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeAlias, Union

Rat: TypeAlias = Fraction
RatLike: TypeAlias = Union[Fraction, int, str]
RatVector: TypeAlias = tuple[Fraction, ...]


def to_rat(value: RatLike) -> Fraction:
    """Coerce int / Fraction / 'p/q' text into a reduced Fraction. Floats are rejected."""
    if isinstance(value, bool):
        raise TypeError('bool is not a rational value.')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in '.eE'):
            raise ValueError(f'Not an exact rational: {value!r}')
        return Fraction(text)
    raise TypeError(f'Unsupported rational input: {type(value).__name__}')


def format_rat(value: Fraction) -> str:
    """'p/q', or 'p' when q == 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def vector(values: Iterable[RatLike]) -> RatVector:
    return tuple(to_rat(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f'Length mismatch: {len(u)} != {len(v)}')
    total = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return total


@dataclass(frozen=True)
class RatMatrix:
    """
    Dense row-major matrix of exact rationals.

    Immutable; every operation returns a new matrix. A matrix may have zero rows
    (an LP without equalities) while still carrying its column count.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError('Matrix dimensions must be non-negative.')
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f'Expected {self.rows * self.cols} entries, got {len(self.entries)}.')

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RatLike]], cols: int | None = None) -> RatMatrix:
        materialized = [vector(r) for r in rows]
        if not materialized:
            return cls(0, cols or 0, ())
        width = len(materialized[0])
        if cols is not None and cols != width:
            raise ValueError(f'Expected {cols} columns, got {width}.')
        for r in materialized:
            if len(r) != width:
                raise ValueError('Ragged rows.')
        return cls(len(materialized), width, tuple(x for r in materialized for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(n, n, tuple(Fraction(1 if i == j else 0) for i in range(n) for j in range(n)))

    @classmethod
    def empty(cls, cols: int) -> RatMatrix:
        return cls(0, cols, ())

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> RatVector:
        start = i * self.cols
        return self.entries[start : start + self.cols]

    def column(self, j: int) -> RatVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __iter__(self) -> Iterator[RatVector]:
        for i in range(self.rows):
            yield self.row(i)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> RatMatrix:
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> RatMatrix:
        return self.transpose()

    def matmul(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise ValueError(f'Shape mismatch: {self.shape} @ {other.shape}')
        other_cols = [other.column(j) for j in range(other.cols)]
        out: list[Fraction] = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(dot(r, col) for col in other_cols)
        return RatMatrix(self.rows, other.cols, tuple(out))

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        return self.matmul(other)

    def apply(self, x: Sequence[Fraction]) -> RatVector:
        """Matrix-vector product M·x."""
        if len(x) != self.cols:
            raise ValueError(f'Vector length {len(x)} does not match {self.cols} columns.')
        return tuple(dot(self.row(i), x) for i in range(self.rows))

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise ValueError(f'Shape mismatch: {self.shape} + {other.shape}')
        return RatMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise ValueError(f'Shape mismatch: {self.shape} - {other.shape}')
        return RatMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, factor: RatLike) -> RatMatrix:
        f = to_rat(factor)
        return RatMatrix(self.rows, self.cols, tuple(f * a for a in self.entries))

    def vstack(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.cols:
            raise ValueError(f'Column mismatch: {self.cols} != {other.cols}')
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def hstack(self, other: RatMatrix) -> RatMatrix:
        if self.rows != other.rows:
            raise ValueError(f'Row mismatch: {self.rows} != {other.rows}')
        entries = tuple(x for i in range(self.rows) for x in self.row(i) + other.row(i))
        return RatMatrix(self.rows, self.cols + other.cols, entries)

    def select_rows(self, indices: Iterable[int]) -> RatMatrix:
        idx = list(indices)
        return RatMatrix(len(idx), self.cols, tuple(x for i in idx for x in self.row(i)))

    def select_columns(self, indices: Iterable[int]) -> RatMatrix:
        idx = list(indices)
        return RatMatrix(
            self.rows, len(idx), tuple(self.entries[i * self.cols + j] for i in range(self.rows) for j in idx)
        )

    def permute_columns(self, images: Sequence[int]) -> RatMatrix:
        """Column j of the result is column images⁻¹(j) of self, i.e. M·Πᵀ for the permutation images."""
        inverse = [0] * len(images)
        for i, img in enumerate(images):
            inverse[img] = i
        return self.select_columns(inverse)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def distinct_values(self) -> list[Fraction]:
        return sorted(set(self.entries))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def to_text(self) -> list[list[str]]:
        return [[format_rat(x) for x in self.row(i)] for i in range(self.rows)]
