"""
< Branch-and-bound enumeration of lexicographically minimum solutions >
1. Minimum-index branching: the node at depth d has fixed x_0..x_{d−1}; its children fix
   x_d to every value from min(upper bound, remaining row budget) down to the lower bound.
2. A node is pruned, in this order, when
   - some group element maps its prefix to a lexicographically smaller one,
   - the LP relaxation with the prefix substituted is infeasible,
   - z_star is given and lies strictly below the relaxation's optimum.
3. Nodes are never pruned by optimality, so every feasible leaf is kept: one solution per
   orbit of the group.
4. With workers > 1 the depth-1 subtrees run in a process pool. Solutions are sorted before
   they are reported, so pooled and serial runs agree.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from lpsym.enums import LpStatus
from lpsym.exceptions import NodeLimitExceeded
from lpsym.groups import Perm, PermGroup
from lpsym.linalg import RatMatrix, dot
from lpsym.lp import IntegerProgram, LinearProgram, is_feasible, solve
from lpsym.oa import FrequencyVector
from lpsym.settings import DEFAULT_SETTINGS, Settings

from .lexmin import PartialSolution, canonical_image, check_group_degree, is_lex_min

logger = logging.getLogger(__name__)

Solution = tuple[int, ...]


@dataclass
class ClassificationStats:
    nodes: int = 0
    lp_solves: int = 0
    pruned_infeasible: int = 0
    pruned_isomorphism: int = 0
    pruned_bound: int = 0

    def merge(self, other: ClassificationStats) -> None:
        self.nodes += other.nodes
        self.lp_solves += other.lp_solves
        self.pruned_infeasible += other.pruned_infeasible
        self.pruned_isomorphism += other.pruned_isomorphism
        self.pruned_bound += other.pruned_bound

    def as_dict(self) -> dict[str, int]:
        return {
            'nodes': self.nodes,
            'lp_solves': self.lp_solves,
            'pruned_infeasible': self.pruned_infeasible,
            'pruned_isomorphism': self.pruned_isomorphism,
            'pruned_bound': self.pruned_bound,
        }


@dataclass
class ClassificationRun:
    ilp: IntegerProgram
    group: PermGroup
    solutions: list[Solution] = field(default_factory=list)
    stats: ClassificationStats = field(default_factory=ClassificationStats)

    def frequency_vectors(self, k: int, s: int) -> list[FrequencyVector]:
        return [FrequencyVector(sol, k, s) for sol in self.solutions]


def _restrict(lp: LinearProgram, values: Sequence[int]) -> tuple[LinearProgram, Fraction] | None:
    """
    Substitute x_j = values[j] for the prefix. Returns the LP over the remaining variables and
    the objective constant, or None when a row left without variables is violated.
    """
    d = len(values)
    n = lp.n
    fixed = [Fraction(v) for v in values]
    keep = range(d, n)

    def split(m: RatMatrix, rhs: Sequence[Fraction], equality: bool) -> tuple[list[list[Fraction]], list[Fraction]] | None:
        rows: list[list[Fraction]] = []
        out_rhs: list[Fraction] = []
        for i in range(m.rows):
            row = m.row(i)
            residual = rhs[i] - dot(row[:d], fixed)
            rest = [row[j] for j in keep]
            if any(rest):
                rows.append(rest)
                out_rhs.append(residual)
            elif (residual != 0) if equality else (residual < 0):
                return None
        return rows, out_rhs

    eq = split(lp.A, lp.b, True)
    le = split(lp.B, lp.d, False)
    if eq is None or le is None:
        return None
    width = n - d
    restricted = LinearProgram(
        A=RatMatrix.from_rows(eq[0], cols=width) if eq[0] else RatMatrix.empty(width),
        b=tuple(eq[1]),
        B=RatMatrix.from_rows(le[0], cols=width) if le[0] else RatMatrix.empty(width),
        d=tuple(le[1]),
        c=tuple(lp.c[j] for j in keep),
    )
    return restricted, dot(lp.c[:d], fixed)


class _Search:
    def __init__(
        self,
        ilp: IntegerProgram,
        group: PermGroup,
        z_star: Fraction | None,
        node_limit: int | None,
    ) -> None:
        self.lp = ilp.lp
        self.n = ilp.n
        self.group = group
        self.z_star = z_star
        self.node_limit = node_limit
        self.stats = ClassificationStats()
        self.solutions: list[Solution] = []
        lo, hi = ilp.variable_bounds()
        if any(b is None for b in lo) or any(b is None for b in hi):
            raise ValueError('Every variable needs finite lower and upper bounds.')
        self.lower = [math.ceil(b) for b in lo]  # type: ignore[arg-type]
        self.upper = [math.floor(b) for b in hi]  # type: ignore[arg-type]
        self.budget_row = self._budget_row()
        # rest_lower[j] = sum of lower bounds of x_j..x_{n-1}
        self.rest_lower = [0] * (len(self.lower) + 1)
        for j in reversed(range(len(self.lower))):
            self.rest_lower[j] = self.rest_lower[j + 1] + self.lower[j]

    def _budget_row(self) -> Fraction | None:
        """Right-hand side of an equality row with every coefficient 1, if any."""
        for i in range(self.lp.m_eq):
            if all(a == 1 for a in self.lp.A.row(i)):
                return self.lp.b[i]
        return None

    def child_values(self, values: Sequence[int]) -> range:
        j = len(values)
        top = self.upper[j]
        if self.budget_row is not None:
            top = min(top, math.floor(self.budget_row - sum(values) - self.rest_lower[j + 1]))
        return range(top, self.lower[j] - 1, -1)

    def passes(self, values: tuple[int, ...]) -> bool:
        """Run the prune tests on one node; True when it must be expanded or kept."""
        self.stats.nodes += 1
        if self.node_limit is not None and self.stats.nodes > self.node_limit:
            raise NodeLimitExceeded(f'Node cap {self.node_limit} reached.')
        if not is_lex_min(PartialSolution(values, self.n), self.group):
            self.stats.pruned_isomorphism += 1
            return False
        restricted = _restrict(self.lp, values)
        if restricted is None:
            self.stats.pruned_infeasible += 1
            return False
        sub, constant = restricted
        if sub.n == 0:
            if self.z_star is not None and self.z_star < constant:
                self.stats.pruned_bound += 1
                return False
            return True
        self.stats.lp_solves += 1
        if self.z_star is None:
            if not is_feasible(sub):
                self.stats.pruned_infeasible += 1
                return False
            return True
        outcome = solve(sub)
        if outcome.status is LpStatus.INFEASIBLE:
            self.stats.pruned_infeasible += 1
            return False
        if outcome.value is not None and self.z_star < outcome.value + constant:
            self.stats.pruned_bound += 1
            return False
        return True

    def explore(self, values: tuple[int, ...]) -> None:
        if not self.passes(values):
            return
        if len(values) == self.n:
            self.solutions.append(values)
            return
        for v in self.child_values(values):
            self.explore((*values, v))


def _subtree_worker(
    ilp: IntegerProgram,
    images: list[tuple[int, ...]],
    z_star: Fraction | None,
    node_limit: int | None,
    root: tuple[int, ...],
) -> tuple[list[Solution], ClassificationStats]:
    group = PermGroup(ilp.n, [Perm(img, check=False) for img in images])
    search = _Search(ilp, group, z_star, node_limit)
    search.explore(root)
    return search.solutions, search.stats


def classify(
    ilp: IntegerProgram,
    group: PermGroup,
    z_star: Fraction | None = None,
    *,
    workers: int | None = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> ClassificationRun:
    """
    Enumerate one lexicographically minimum integer solution per group orbit.

    The group must consist of symmetries of the program; that is the caller's responsibility.

    Raises
    ------
    GroupDegreeMismatch
        If the group does not act on the program's variables.
    NodeLimitExceeded
        If `settings.node_limit` is set and reached (per worker when pooled).
    """
    check_group_degree(ilp.n, group)
    if not all(ilp.integer):
        raise ValueError('Branching needs every variable to be integral.')
    pool_size = settings.workers if workers is None else workers
    search = _Search(ilp, group, z_star, settings.node_limit)
    run = ClassificationRun(ilp=ilp, group=group)
    logger.info('classifying over %d variables with a group of order %d', ilp.n, group.order())

    root_ok = search.passes(())
    if not root_ok or ilp.n == 0:
        if root_ok:
            run.solutions.append(())
        run.stats = search.stats
        return run
    roots = [(v,) for v in search.child_values(())]
    if pool_size > 1 and len(roots) > 1:
        images = [g.images for g in group.generators]
        with ProcessPoolExecutor(max_workers=pool_size) as pool:
            futures = [
                pool.submit(_subtree_worker, ilp, images, z_star, settings.node_limit, root) for root in roots
            ]
            for future in futures:
                solutions, stats = future.result()
                run.solutions.extend(solutions)
                search.stats.merge(stats)
    else:
        for root in roots:
            search.explore(root)
        run.solutions.extend(search.solutions)
    run.stats = search.stats
    run.solutions.sort()
    logger.info('%d solutions, %s', len(run.solutions), run.stats.as_dict())
    return run


def verify_partition(solutions: Sequence[Sequence[int]], group: PermGroup) -> list[list[int]]:
    """
    Group solution indices into orbits of `group`, each class sorted, classes ordered by
    their first member.
    """
    classes: dict[tuple[int, ...], list[int]] = {}
    for i, sol in enumerate(solutions):
        classes.setdefault(canonical_image(sol, group), []).append(i)
    return sorted(classes.values(), key=lambda members: members[0])
