"""
< Exact two-phase bounded-variable primal simplex >
1. Translate the LP (free variables, B x ≤ d) into  M y = r, 0 ≤ y ≤ u  (`_BoundedForm`):
   single-variable rows become bounds, free variables are split, other inequality rows get slacks.
2. Phase 1 minimizes the sum of one artificial per row; a positive optimum means infeasible.
3. Artificials still basic at zero are pivoted out, or their (redundant) rows are dropped.
4. Phase 2 minimizes the real objective. Bland's rule (smallest eligible index enters,
   smallest index leaves on ratio ties) guarantees termination on degenerate polytopes.

All arithmetic is over Fraction; results are exact and deterministic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from lpsym.enums import LpStatus

from .model import LinearProgram, LpOutcome

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)


@dataclass
class _BoundedForm:
    n_vars: int
    rows: list[list[Fraction]] = field(default_factory=list)
    rhs: list[Fraction] = field(default_factory=list)
    upper: list[Fraction | None] = field(default_factory=list)
    cost: list[Fraction] = field(default_factory=list)
    offsets: list[Fraction] = field(default_factory=list)
    # (original variable or -1 for a slack, sign)
    columns: list[tuple[int, int]] = field(default_factory=list)
    infeasible: bool = False

    @classmethod
    def from_lp(cls, lp: LinearProgram) -> _BoundedForm:
        n = lp.n
        form = cls(n_vars=n)
        lo: list[Fraction | None] = [None] * n
        hi: list[Fraction | None] = [None] * n
        general: list[int] = []
        for i in range(lp.B.rows):
            row = lp.B.row(i)
            support = [j for j, a in enumerate(row) if a != 0]
            if not support:
                if lp.d[i] < 0:
                    form.infeasible = True
                continue
            if len(support) == 1:
                j = support[0]
                bound = lp.d[i] / row[j]
                if row[j] > 0:
                    cur = hi[j]
                    hi[j] = bound if cur is None or bound < cur else cur
                else:
                    cur = lo[j]
                    lo[j] = bound if cur is None or bound > cur else cur
                continue
            general.append(i)

        # columns for the structural variables
        var_columns: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        form.offsets = [_ZERO] * n
        for j in range(n):
            lj, hj = lo[j], hi[j]
            if lj is not None and hj is not None and lj > hj:
                form.infeasible = True
            if lj is not None:
                form.offsets[j] = lj
                form._add_column(var_columns, j, 1, None if hj is None else hj - lj)
            elif hj is not None:
                form.offsets[j] = hj
                form._add_column(var_columns, j, -1, None)
            else:
                form._add_column(var_columns, j, 1, None)
                form._add_column(var_columns, j, -1, None)
        if form.infeasible:
            return form

        width = len(form.columns)

        def substituted(row: tuple[Fraction, ...], rhs: Fraction) -> tuple[list[Fraction], Fraction]:
            out = [_ZERO] * width
            shifted = rhs
            for j, a in enumerate(row):
                if not a:
                    continue
                shifted -= a * form.offsets[j]
                for col, sign in var_columns[j]:
                    out[col] = a * sign
            return out, shifted

        for i in range(lp.A.rows):
            coeffs, r = substituted(lp.A.row(i), lp.b[i])
            if not any(coeffs):
                if r != 0:
                    form.infeasible = True
                    return form
                continue
            form.rows.append(coeffs)
            form.rhs.append(r)
        slack_rows = []
        for i in general:
            coeffs, r = substituted(lp.B.row(i), lp.d[i])
            form.rows.append(coeffs)
            form.rhs.append(r)
            slack_rows.append(len(form.rows) - 1)
        for r_index in slack_rows:
            form.columns.append((-1, 1))
            form.upper.append(None)
            for k, row in enumerate(form.rows):
                row.append(Fraction(1) if k == r_index else _ZERO)

        form.cost = [_ZERO] * len(form.columns)
        for col, (j, sign) in enumerate(form.columns):
            if j >= 0:
                form.cost[col] = lp.c[j] * sign
        return form

    def _add_column(self, var_columns: list[list[tuple[int, int]]], j: int, sign: int, upper: Fraction | None) -> None:
        var_columns[j].append((len(self.columns), sign))
        self.columns.append((j, sign))
        self.upper.append(upper)

    def recover(self, y: list[Fraction]) -> tuple[Fraction, ...]:
        x = list(self.offsets)
        for col, (j, sign) in enumerate(self.columns):
            if j >= 0 and y[col]:
                x[j] += sign * y[col]
        return tuple(x)


class _Tableau:
    """Dense tableau B⁻¹[M | I] with basic values and nonbasic bound status."""

    def __init__(self, form: _BoundedForm) -> None:
        m = len(form.rows)
        width = len(form.columns)
        self.n_struct = width
        self.rows: list[list[Fraction]] = []
        self.xb: list[Fraction] = []
        for i in range(m):
            row = list(form.rows[i])
            r = form.rhs[i]
            if r < 0:
                row = [-a for a in row]
                r = -r
            row.extend(Fraction(1) if k == i else _ZERO for k in range(m))
            self.rows.append(row)
            self.xb.append(r)
        self.upper: list[Fraction | None] = list(form.upper) + [None] * m
        self.basis = [width + i for i in range(m)]
        self.at_upper = [False] * (width + m)
        self.pivots = 0

    @property
    def width(self) -> int:
        return len(self.upper)

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        d = list(cost)
        for i, bi in enumerate(self.basis):
            cb = cost[bi]
            if not cb:
                continue
            row = self.rows[i]
            for j, a in enumerate(row):
                if a:
                    d[j] -= cb * a
        return d

    def pivot(self, r: int, j: int, d: list[Fraction]) -> None:
        row_r = self.rows[r]
        piv = row_r[j]
        if piv != 1:
            row_r = [a / piv for a in row_r]
            self.rows[r] = row_r
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[j]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(row, row_r)]
        dj = d[j]
        if dj:
            for k, b in enumerate(row_r):
                if b:
                    d[k] -= dj * b
        self.basis[r] = j
        self.pivots += 1

    def value_of_nonbasic(self, j: int) -> Fraction:
        if self.at_upper[j]:
            up = self.upper[j]
            return up if up is not None else _ZERO
        return _ZERO

    def iterate(self, cost: list[Fraction]) -> LpStatus:
        d = self.reduced_costs(cost)
        while True:
            in_basis = set(self.basis)
            entering: tuple[int, int] | None = None
            for j in range(self.width):
                if j in in_basis:
                    continue
                dj = d[j]
                if not self.at_upper[j]:
                    up = self.upper[j]
                    if dj < 0 and (up is None or up > 0):
                        entering = (j, 1)
                        break
                elif dj > 0:
                    entering = (j, -1)
                    break
            if entering is None:
                return LpStatus.OPTIMAL
            j, direction = entering

            # (step length, variable index, row) ; row -1 means a bound flip of the entering variable
            best: tuple[Fraction, int, int] | None = None
            up_j = self.upper[j]
            if up_j is not None:
                best = (up_j, j, -1)
            for i, row in enumerate(self.rows):
                a = row[j]
                if not a:
                    continue
                rate = -a if direction > 0 else a
                bi = self.basis[i]
                if rate < 0:
                    limit = self.xb[i] / -rate
                else:
                    up_b = self.upper[bi]
                    if up_b is None:
                        continue
                    limit = (up_b - self.xb[i]) / rate
                if best is None or (limit, bi) < (best[0], best[1]):
                    best = (limit, bi, i)
            if best is None:
                logger.debug('unbounded ray along column %d', j)
                return LpStatus.UNBOUNDED
            theta, _, r = best
            if theta:
                for i, row in enumerate(self.rows):
                    a = row[j]
                    if a:
                        self.xb[i] += (-a if direction > 0 else a) * theta
            if r == -1:
                self.at_upper[j] = not self.at_upper[j]
                continue
            leaving = self.basis[r]
            a_rj = self.rows[r][j]
            leaving_to_upper = (-a_rj if direction > 0 else a_rj) > 0
            entering_value = theta if direction > 0 else (up_j if up_j is not None else _ZERO) - theta
            self.pivot(r, j, d)
            self.xb[r] = entering_value
            self.at_upper[leaving] = leaving_to_upper
            self.at_upper[j] = False

    def drive_out_artificials(self) -> None:
        """Pivot zero-valued basic artificials out; drop rows where that is impossible."""
        keep: list[int] = []
        dummy = [_ZERO] * self.width
        for r in range(len(self.rows)):
            if self.basis[r] < self.n_struct:
                keep.append(r)
                continue
            row = self.rows[r]
            j = next((k for k in range(self.n_struct) if row[k] and k not in self.basis), None)
            if j is None:
                continue
            value = self.value_of_nonbasic(j)
            self.pivot(r, j, dummy)
            self.xb[r] = value
            self.at_upper[j] = False
            keep.append(r)
        width = self.n_struct
        self.rows = [self.rows[r][:width] for r in keep]
        self.xb = [self.xb[r] for r in keep]
        self.basis = [self.basis[r] for r in keep]
        self.upper = self.upper[:width]
        self.at_upper = self.at_upper[:width]

    def solution(self) -> list[Fraction]:
        y = [self.value_of_nonbasic(j) for j in range(self.width)]
        for i, bi in enumerate(self.basis):
            y[bi] = self.xb[i]
        return y


def _phase_one(form: _BoundedForm) -> _Tableau | None:
    tab = _Tableau(form)
    width = tab.n_struct
    cost = [_ZERO] * width + [Fraction(1)] * len(tab.rows)
    tab.iterate(cost)
    infeasibility = sum((tab.xb[i] for i, bi in enumerate(tab.basis) if bi >= width), _ZERO)
    if infeasibility > 0:
        logger.debug('phase 1 ended with infeasibility %s after %d pivots', infeasibility, tab.pivots)
        return None
    tab.drive_out_artificials()
    return tab


def is_feasible(lp: LinearProgram) -> bool:
    """True iff {x : Ax = b, Bx ≤ d} is nonempty (phase 1 only)."""
    form = _BoundedForm.from_lp(lp)
    if form.infeasible:
        return False
    return _phase_one(form) is not None


def feasible_point(lp: LinearProgram) -> tuple[Fraction, ...] | None:
    """Some feasible point (the phase-1 vertex), or None when infeasible."""
    form = _BoundedForm.from_lp(lp)
    if form.infeasible:
        return None
    tab = _phase_one(form)
    if tab is None:
        return None
    return form.recover(tab.solution())


def solve(lp: LinearProgram) -> LpOutcome:
    """
    Minimize cᵀx exactly.

    Returns
    -------
    LpOutcome
        OPTIMAL with the vertex reached and its value, or INFEASIBLE / UNBOUNDED.
        The same input always reports the same vertex.
    """
    form = _BoundedForm.from_lp(lp)
    if form.infeasible:
        return LpOutcome(LpStatus.INFEASIBLE)
    tab = _phase_one(form)
    if tab is None:
        return LpOutcome(LpStatus.INFEASIBLE)
    status = tab.iterate(form.cost)
    if status is LpStatus.UNBOUNDED:
        return LpOutcome(LpStatus.UNBOUNDED)
    point = form.recover(tab.solution())
    value = lp.objective(point)
    logger.debug('optimal value %s after %d pivots', value, tab.pivots)
    return LpOutcome(LpStatus.OPTIMAL, value=value, point=point)


def maximize(lp: LinearProgram, objective: tuple[Fraction, ...]) -> LpOutcome:
    """max objectiveᵀx over lp's feasible set; the returned value is the maximum (not negated)."""
    outcome = solve(lp.with_objective(tuple(-a for a in objective)))
    if outcome.status is not LpStatus.OPTIMAL or outcome.value is None:
        return outcome
    return LpOutcome(LpStatus.OPTIMAL, value=-outcome.value, point=outcome.point)
