from __future__ import annotations

import logging
import random
from fractions import Fraction

from lpsym.enums import LpStatus

from .model import LinearProgram
from .simplex import feasible_point, solve

logger = logging.getLogger(__name__)


def vertices(lp: LinearProgram, tries: int, seed: int = 0) -> list[tuple[Fraction, ...]]:
    """Distinct optimal vertices reached by minimizing random small-integer objectives."""
    rng = random.Random(seed)
    found: dict[tuple[Fraction, ...], None] = {}
    start = feasible_point(lp)
    if start is None:
        return []
    found[start] = None
    for _ in range(tries):
        objective = [Fraction(rng.randint(-5, 5)) for _ in range(lp.n)]
        outcome = solve(lp.with_objective(objective))
        if outcome.status is LpStatus.OPTIMAL and outcome.point is not None:
            found.setdefault(outcome.point, None)
    return list(found)


def sample_points(lp: LinearProgram, count: int, seed: int = 0) -> list[tuple[Fraction, ...]]:
    """
    Deterministic feasible rational points: random convex combinations of sampled vertices.

    Returns an empty list for an infeasible LP.
    """
    rng = random.Random(seed)
    pool = vertices(lp, tries=max(4, 2 * lp.n), seed=seed)
    if not pool:
        return []
    points: list[tuple[Fraction, ...]] = []
    for _ in range(count):
        weights = [rng.randint(0, 7) for _ in pool]
        if not any(weights):
            weights[rng.randrange(len(pool))] = 1
        total = sum(weights)
        point = tuple(
            sum((Fraction(w, total) * v[j] for w, v in zip(weights, pool) if w), Fraction(0)) for j in range(lp.n)
        )
        points.append(point)
    logger.debug('sampled %d points from %d vertices', len(points), len(pool))
    return points
