from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Annotated

from typing_extensions import Doc

from lpsym.linalg import RatLike, RatMatrix, to_rat, vector

from .model import IntegerProgram, LinearProgram


class LpBuilder:
    """
    A small mutable builder for LinearProgram.

    Rows accumulate in insertion order, which is the row order of the built program
    (row order matters: standard-form tie-breaking and reports are index based).
    `build()` seals the builder; any later mutation raises RuntimeError.

    Typical usage
    -------------
    >>> lp = (
    ...     LpBuilder(2)
    ...         .minimize([1, 0])
    ...         .equal([1, 1], 1)
    ...         .at_least([1, 0], 0)
    ...         .at_least([0, 1], 0)
    ...         .build()
    ... )
    >>> lp.m_eq, lp.m_ineq
    (1, 2)

    Sparse rows can be given as {index: coefficient} mappings.
    """

    def __init__(self, n: Annotated[int, Doc('Number of variables.')]) -> None:
        if n < 0:
            raise ValueError('Variable count must be non-negative.')
        self.n = n
        self._c: tuple[Fraction, ...] = (Fraction(0),) * n
        self._eq: list[tuple[tuple[Fraction, ...], Fraction]] = []
        self._le: list[tuple[tuple[Fraction, ...], Fraction]] = []
        self._sealed = False

    def _ensure_mutable(self) -> None:
        if self._sealed:
            raise RuntimeError('This builder has already been built. Create a new LpBuilder.')

    def _row(self, coefficients: Iterable[RatLike] | Mapping[int, RatLike]) -> tuple[Fraction, ...]:
        if isinstance(coefficients, Mapping):
            row = [Fraction(0)] * self.n
            for j, a in coefficients.items():
                if not 0 <= j < self.n:
                    raise ValueError(f'Variable index {j} out of range 0..{self.n - 1}.')
                row[j] = to_rat(a)
            return tuple(row)
        row_t = vector(coefficients)
        if len(row_t) != self.n:
            raise ValueError(f'Row has {len(row_t)} coefficients, expected {self.n}.')
        return row_t

    def minimize(self, c: Iterable[RatLike] | Mapping[int, RatLike]) -> LpBuilder:
        self._ensure_mutable()
        self._c = self._row(c)
        return self

    def equal(self, row: Iterable[RatLike] | Mapping[int, RatLike], rhs: RatLike) -> LpBuilder:
        self._ensure_mutable()
        self._eq.append((self._row(row), to_rat(rhs)))
        return self

    def at_most(self, row: Iterable[RatLike] | Mapping[int, RatLike], rhs: RatLike) -> LpBuilder:
        self._ensure_mutable()
        self._le.append((self._row(row), to_rat(rhs)))
        return self

    def at_least(self, row: Iterable[RatLike] | Mapping[int, RatLike], rhs: RatLike) -> LpBuilder:
        """Stored as the negated `<=` row, so B x ≤ d stays the only inequality shape."""
        self._ensure_mutable()
        r = self._row(row)
        self._le.append((tuple(-a for a in r), -to_rat(rhs)))
        return self

    def bounds(self, lower: RatLike | None = None, upper: RatLike | None = None) -> LpBuilder:
        """Add `-x_j ≤ -lower` rows for every j, then `x_j ≤ upper` rows (the [-I; I] block order)."""
        self._ensure_mutable()
        if lower is not None:
            for j in range(self.n):
                self.at_least({j: 1}, lower)
        if upper is not None:
            for j in range(self.n):
                self.at_most({j: 1}, upper)
        return self

    def build(self) -> LinearProgram:
        self._ensure_mutable()
        self._sealed = True
        n = self.n
        return LinearProgram(
            A=RatMatrix.from_rows((r for r, _ in self._eq), cols=n) if self._eq else RatMatrix.empty(n),
            b=tuple(rhs for _, rhs in self._eq),
            B=RatMatrix.from_rows((r for r, _ in self._le), cols=n) if self._le else RatMatrix.empty(n),
            d=tuple(rhs for _, rhs in self._le),
            c=self._c,
        )

    def build_integer(self) -> IntegerProgram:
        return IntegerProgram(self.build())
