"""
< Putting a feasible LP into standard form >
1. `find_implicit_equalities`: an inequality whose minimum over the feasible set equals its
   right-hand side holds with equality everywhere; it moves into the equality block.
2. `remove_redundant_inequalities`: an inequality whose maximum over the remaining system
   does not exceed its right-hand side is implied; it is dropped. Rows are tested from the
   highest index down against the current (already pruned) system, so between two
   inequalities describing the same facet the lower-index one is kept.
3. `standardize`: 1 then 2, then drop linearly dependent equality rows keeping the
   lowest-index independent ones.

Row indices in reports always refer to the input's inequality block, except
`dropped_equalities`, which indexes the equality block after promotion (original
equalities, then promoted rows in ascending original index).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from lpsym.enums import LpStatus
from lpsym.exceptions import InfeasibleInput
from lpsym.linalg import independent_rows, rank

from .model import LinearProgram
from .simplex import is_feasible, maximize, solve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardFormReport:
    lp: LinearProgram
    promoted_rows: tuple[int, ...] = ()
    dropped_inequalities: tuple[int, ...] = ()
    dropped_equalities: tuple[int, ...] = ()

    @property
    def changed(self) -> bool:
        return bool(self.promoted_rows or self.dropped_inequalities or self.dropped_equalities)


def _require_feasible(lp: LinearProgram) -> None:
    if not is_feasible(lp):
        raise InfeasibleInput('The linear program is infeasible; standard form is only defined for feasible LPs.')


def find_implicit_equalities(lp: LinearProgram) -> StandardFormReport:
    """
    Promote every inequality that is tight at all feasible points.

    Raises
    ------
    InfeasibleInput
        If the LP is infeasible.
    """
    _require_feasible(lp)
    promoted: list[int] = []
    for i in range(lp.B.rows):
        beta = lp.B.row(i)
        outcome = solve(lp.with_objective(beta))
        if outcome.status is LpStatus.OPTIMAL and outcome.value == lp.d[i]:
            promoted.append(i)
    if not promoted:
        return StandardFormReport(lp)
    logger.info('promoted %d implicit equalities: %s', len(promoted), promoted)
    kept = [i for i in range(lp.B.rows) if i not in set(promoted)]
    promoted_lp = lp.with_equalities(lp.B.select_rows(promoted), [lp.d[i] for i in promoted]).select(ineq_rows=kept)
    return StandardFormReport(promoted_lp, promoted_rows=tuple(promoted))


def _drop_redundant(lp: LinearProgram) -> tuple[LinearProgram, list[int]]:
    """Returns the pruned LP and the dropped positions (indices into lp's inequality block)."""
    alive = list(range(lp.B.rows))
    dropped: list[int] = []
    # descending: of two rows defining the same facet the first one tested is dropped, so
    # the lower index survives; an ascending pass would keep the higher one
    for i in reversed(range(lp.B.rows)):
        others = [k for k in alive if k != i]
        outcome = maximize(lp.select(ineq_rows=others), lp.B.row(i))
        if outcome.status is LpStatus.OPTIMAL and outcome.value is not None and outcome.value <= lp.d[i]:
            alive = others
            dropped.append(i)
            logger.debug('inequality %d is redundant (max %s <= %s)', i, outcome.value, lp.d[i])
    dropped.sort()
    return lp.select(ineq_rows=alive), dropped


def remove_redundant_inequalities(lp: LinearProgram) -> StandardFormReport:
    """
    Drop implied inequalities.

    Raises
    ------
    InfeasibleInput
        If the LP is infeasible.
    """
    _require_feasible(lp)
    pruned, dropped = _drop_redundant(lp)
    return StandardFormReport(pruned, dropped_inequalities=tuple(dropped))


def standardize(lp: LinearProgram) -> StandardFormReport:
    """
    Implicit-equality promotion, inequality pruning, then dependent-equality removal.

    The feasible set is unchanged; the result has a full-row-rank equality matrix, no
    implicit equalities and no redundant inequalities. Standardizing a standard-form LP
    returns it unchanged.

    Raises
    ------
    InfeasibleInput
        If the LP is infeasible.
    """
    step1 = find_implicit_equalities(lp)
    promoted = step1.promoted_rows
    remaining = [i for i in range(lp.B.rows) if i not in set(promoted)]

    pruned, dropped_local = _drop_redundant(step1.lp)
    dropped_ineq = tuple(remaining[k] for k in dropped_local)

    independent = independent_rows(pruned.A)
    dropped_eq = tuple(i for i in range(pruned.A.rows) if i not in set(independent))
    result = pruned.select(eq_rows=independent)
    logger.info(
        'standardize: %d promoted, %d inequalities dropped, %d equalities dropped',
        len(promoted),
        len(dropped_ineq),
        len(dropped_eq),
    )
    return StandardFormReport(
        result,
        promoted_rows=promoted,
        dropped_inequalities=dropped_ineq,
        dropped_equalities=dropped_eq,
    )


def has_full_row_rank(lp: LinearProgram) -> bool:
    return rank(lp.A) == lp.A.rows


def is_standard_form(lp: LinearProgram) -> bool:
    """Check the definition directly (feasible, full row rank, no implicit equalities, no redundancy)."""
    if not is_feasible(lp) or not has_full_row_rank(lp):
        return False
    return not standardize(lp).changed
