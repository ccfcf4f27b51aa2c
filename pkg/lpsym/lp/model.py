from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction

from lpsym.enums import LpStatus
from lpsym.linalg import RatLike, RatMatrix, RatVector, dot, to_rat, vector


@dataclass(frozen=True)
class LinearProgram:
    """
    min cᵀx  s.t.  A x = b,  B x ≤ d   (x free unless bounded by rows of B).

    Either block may have zero rows; both always carry the variable count as column count.
    """

    A: RatMatrix
    b: RatVector
    B: RatMatrix
    d: RatVector
    c: RatVector

    def __post_init__(self) -> None:
        n = len(self.c)
        if self.A.cols != n or self.B.cols != n:
            raise ValueError(f'Column counts ({self.A.cols}, {self.B.cols}) must equal the variable count {n}.')
        if len(self.b) != self.A.rows:
            raise ValueError(f'|b|={len(self.b)} does not match {self.A.rows} equality rows.')
        if len(self.d) != self.B.rows:
            raise ValueError(f'|d|={len(self.d)} does not match {self.B.rows} inequality rows.')

    @classmethod
    def from_rows(
        cls,
        c: Iterable[RatLike],
        *,
        eq: Iterable[tuple[Iterable[RatLike], RatLike]] = (),
        le: Iterable[tuple[Iterable[RatLike], RatLike]] = (),
    ) -> LinearProgram:
        cv = vector(c)
        n = len(cv)
        eq_rows = [(vector(r), to_rat(rhs)) for r, rhs in eq]
        le_rows = [(vector(r), to_rat(rhs)) for r, rhs in le]
        return cls(
            A=RatMatrix.from_rows((r for r, _ in eq_rows), cols=n) if eq_rows else RatMatrix.empty(n),
            b=tuple(rhs for _, rhs in eq_rows),
            B=RatMatrix.from_rows((r for r, _ in le_rows), cols=n) if le_rows else RatMatrix.empty(n),
            d=tuple(rhs for _, rhs in le_rows),
            c=cv,
        )

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def m_eq(self) -> int:
        return self.A.rows

    @property
    def m_ineq(self) -> int:
        return self.B.rows

    def contains(self, x: Sequence[Fraction]) -> bool:
        """Exact membership of x in the feasible set."""
        if len(x) != self.n:
            raise ValueError(f'Point has {len(x)} coordinates, expected {self.n}.')
        if any(dot(self.A.row(i), x) != self.b[i] for i in range(self.A.rows)):
            return False
        return all(dot(self.B.row(i), x) <= self.d[i] for i in range(self.B.rows))

    def objective(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.c, x)

    def with_objective(self, c: Iterable[RatLike]) -> LinearProgram:
        return replace(self, c=vector(c))

    def without_objective(self) -> LinearProgram:
        return replace(self, c=(Fraction(0),) * self.n)

    def with_equalities(self, rows: RatMatrix, rhs: Sequence[Fraction]) -> LinearProgram:
        return replace(self, A=self.A.vstack(rows), b=self.b + tuple(rhs))

    def without_equalities(self) -> LinearProgram:
        return replace(self, A=RatMatrix.empty(self.n), b=())

    def select(self, *, eq_rows: Iterable[int] | None = None, ineq_rows: Iterable[int] | None = None) -> LinearProgram:
        """Keep only the listed equality / inequality rows (None keeps all)."""
        eq_idx = list(range(self.A.rows)) if eq_rows is None else list(eq_rows)
        in_idx = list(range(self.B.rows)) if ineq_rows is None else list(ineq_rows)
        return replace(
            self,
            A=self.A.select_rows(eq_idx),
            b=tuple(self.b[i] for i in eq_idx),
            B=self.B.select_rows(in_idx),
            d=tuple(self.d[i] for i in in_idx),
        )


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    value: Fraction | None = None
    point: RatVector | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


@dataclass(frozen=True)
class IntegerProgram:
    """A linear program whose variables flagged in `integer` must take integer values."""

    lp: LinearProgram
    integer: tuple[bool, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.integer:
            object.__setattr__(self, 'integer', (True,) * self.lp.n)
        if len(self.integer) != self.lp.n:
            raise ValueError('Integrality flags must cover every variable.')

    @property
    def n(self) -> int:
        return self.lp.n

    def variable_bounds(self) -> tuple[list[Fraction | None], list[Fraction | None]]:
        """Tightest bounds implied by single-variable inequality rows (None = unbounded)."""
        lo: list[Fraction | None] = [None] * self.n
        hi: list[Fraction | None] = [None] * self.n
        for i in range(self.lp.B.rows):
            row = self.lp.B.row(i)
            support = [j for j, a in enumerate(row) if a != 0]
            if len(support) != 1:
                continue
            j = support[0]
            bound = self.lp.d[i] / row[j]
            if row[j] > 0:
                hi[j] = bound if hi[j] is None else min(hi[j], bound)  # type: ignore[type-var]
            else:
                lo[j] = bound if lo[j] is None else max(lo[j], bound)  # type: ignore[type-var]
        return lo, hi
