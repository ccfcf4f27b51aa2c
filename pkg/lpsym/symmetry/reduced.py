from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from lpsym.exceptions import NotStandardForm
from lpsym.groups import Perm
from lpsym.linalg import RatMatrix, RatVector, dot, rref
from lpsym.lp import LinearProgram


@dataclass(frozen=True)
class ReducedObjective:
    """
    The objective restricted to the affine space Ax = b, written over the free
    (non-pivot) variables: cᵀx = ĉᵀx̂ + a whenever Ax = b.
    """

    c_hat: RatVector
    a: Fraction
    free_vars: tuple[int, ...]

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.c_hat, [x[j] for j in self.free_vars]) + self.a

    def same_as(self, other: ReducedObjective) -> bool:
        return self.free_vars == other.free_vars and self.c_hat == other.c_hat and self.a == other.a


def reduce_objective(lp: LinearProgram, perm: Perm | None = None) -> ReducedObjective:
    """
    Substitute the basic variables of the RREF of [A | b] into the objective.

    With `perm` given the objective reduced is x ↦ cᵀ·perm(x), whose coefficient vector
    is c'_i = c_{perm(i)}.

    Raises
    ------
    NotStandardForm
        If A does not have full row rank or the system Ax = b is inconsistent.
    """
    n = lp.n
    c = list(lp.c) if perm is None else [lp.c[perm(i)] for i in range(n)]
    rhs = RatMatrix.from_rows([[value] for value in lp.b], cols=1) if lp.m_eq else None
    r, pivots = rref(lp.A, rhs)
    if len(pivots) != lp.m_eq or (pivots and pivots[-1] >= n):
        raise NotStandardForm('Equality rows must be consistent and of full row rank.')
    pivot_set = set(pivots)
    free = tuple(j for j in range(n) if j not in pivot_set)
    a = sum((c[p] * r[row, n] for row, p in enumerate(pivots)), Fraction(0))
    c_hat = tuple(c[f] - sum((c[p] * r[row, f] for row, p in enumerate(pivots)), Fraction(0)) for f in free)
    return ReducedObjective(c_hat=c_hat, a=a, free_vars=free)
