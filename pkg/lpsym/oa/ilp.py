"""
< Integer programs whose solutions are the frequency vectors of OA(N, k, s, t) >
1. `build_ilp_bf`: one equality per t-subset of columns and t-tuple of levels.
2. `build_ilp_improved`: the linearly independent row-equivalent system (level tuples over
   0..s−2 only, for every subset of size 0..t), plus the anchor x_0 ≥ 1 used by the search.
3. `standard_relaxation`: the LP of (2) without the anchor; the symmetry groups of OA
   formulations are computed on it.
4. `build_ilp_jform`: two-level only; N-row count plus vanishing J-characteristic rows
   stated with both signs.
5. `build_inequality_form`: the basic variables of (3) eliminated, leaving inequalities only.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import prod

from lpsym.exceptions import InvalidSpec, NotBinary, NotStandardForm
from lpsym.linalg import RatLike, RatMatrix, rank, rref
from lpsym.lp import IntegerProgram, LinearProgram, LpBuilder
from lpsym.utils import experimental

from .indexing import FrequencyVector, Run, all_runs
from .spec import OASpec

logger = logging.getLogger(__name__)


def _require_strength(spec: OASpec) -> None:
    if spec.t < 1:
        raise InvalidSpec(f'{spec.label()}: strength 0 imposes no balance rows.')


def _indicator(runs: Sequence[Run], columns: Sequence[int], levels: Sequence[int]) -> dict[int, int]:
    return {i: 1 for i, run in enumerate(runs) if all(run[c] == lv for c, lv in zip(columns, levels))}


def build_ilp_bf(spec: OASpec) -> IntegerProgram:
    """min 1ᵀx over balance rows for every t-subset and level tuple, 0 ≤ x ≤ p_max."""
    _require_strength(spec)
    runs = all_runs(spec.k, spec.s)
    builder = LpBuilder(spec.n_vars).minimize([1] * spec.n_vars)
    for columns in combinations(range(spec.k), spec.t):
        for levels in product(range(spec.s), repeat=spec.t):
            builder.equal(_indicator(runs, columns, levels), spec.lam)
    return builder.bounds(0, spec.cap).build_integer()


def _improved_rows(spec: OASpec) -> list[tuple[dict[int, int], int]]:
    runs = all_runs(spec.k, spec.s)
    rows: list[tuple[dict[int, int], int]] = []
    for q in range(spec.t + 1):
        rhs = spec.N // spec.s**q
        for columns in combinations(range(spec.k), q):
            for levels in product(range(spec.s - 1), repeat=q):
                rows.append((_indicator(runs, columns, levels), rhs))
    return rows


def _check_independent(lp: LinearProgram, spec: OASpec) -> None:
    r = rank(lp.A)
    if r != lp.m_eq:
        raise NotStandardForm(f'{spec.label()}: {lp.m_eq} balance rows have rank {r}.')
    logger.debug('%s: %d independent balance rows', spec.label(), r)


def build_ilp_improved(spec: OASpec) -> IntegerProgram:
    """The independent balance system with objective 0, the anchor x_0 ≥ 1 and 0 ≤ x ≤ p_max."""
    _require_strength(spec)
    builder = LpBuilder(spec.n_vars)
    for row, rhs in _improved_rows(spec):
        builder.equal(row, rhs)
    builder.at_least({0: 1}, 1)
    program = builder.bounds(0, spec.cap).build_integer()
    _check_independent(program.lp, spec)
    return program


def standard_relaxation(spec: OASpec, objective: Sequence[RatLike] | None = None) -> LinearProgram:
    """
    LP relaxation of the independent balance system with both bound families and no anchor.

    Each run sits in a balance row summing to λ, so with x ≥ 0 the upper bounds x_i ≤ p_max
    are implied whenever p_max = λ (the default). They are kept so the inequality block is
    always [−I; I]; `standardize` removes them when they are redundant.
    """
    _require_strength(spec)
    builder = LpBuilder(spec.n_vars)
    if objective is not None:
        builder.minimize(objective)
    for row, rhs in _improved_rows(spec):
        builder.equal(row, rhs)
    lp = builder.bounds(0, spec.cap).build()
    _check_independent(lp, spec)
    return lp


def hadamard_row(runs: Sequence[Run], columns: Sequence[int]) -> list[int]:
    """Entrywise product of the signed columns (level 0 ↦ +1, level 1 ↦ −1) over all runs."""
    return [prod(1 - 2 * run[c] for c in columns) for run in runs]


def j_matrix(k: int, t: int) -> RatMatrix:
    """Rows z_ℓ for every column subset ℓ with 1 ≤ |ℓ| ≤ t, by size then lexicographically."""
    runs = all_runs(k, 2)
    rows = [hadamard_row(runs, columns) for r in range(1, t + 1) for columns in combinations(range(k), r)]
    return RatMatrix.from_rows(rows, cols=2**k) if rows else RatMatrix.empty(2**k)


def build_ilp_jform(spec: OASpec) -> IntegerProgram:
    """
    min 1ᵀx s.t. 1ᵀx = N, Mx = 0, −Mx = 0, x ≥ 0.

    Raises
    ------
    NotBinary
        If s != 2.
    """
    if spec.s != 2:
        raise NotBinary(f'{spec.label()}: the J-characteristic formulation needs s = 2.')
    _require_strength(spec)
    n = spec.n_vars
    m = j_matrix(spec.k, spec.t)
    builder = LpBuilder(n).minimize([1] * n).equal([1] * n, spec.N)
    for sign in (1, -1):
        for i in range(m.rows):
            builder.equal([sign * a for a in m.row(i)], 0)
    return builder.bounds(lower=0).build_integer()


@dataclass(frozen=True)
class InequalityForm:
    """
    The inequality-only program over the free variables, with the affine map back to
    full frequency vectors: x_basic[r] = offset[r] − Σ_f coeffs[r][f]·x_free[f].
    """

    program: IntegerProgram
    spec: OASpec
    basic: tuple[int, ...]
    free: tuple[int, ...]
    offset: tuple[Fraction, ...]
    coeffs: tuple[tuple[Fraction, ...], ...]

    def lift(self, x_free: Sequence[int | Fraction]) -> FrequencyVector:
        counts = [0] * self.spec.n_vars
        for f, value in zip(self.free, x_free):
            counts[f] = int(value)
        for r, b in enumerate(self.basic):
            value = self.offset[r] - sum((a * v for a, v in zip(self.coeffs[r], x_free)), Fraction(0))
            if value.denominator != 1:
                raise ValueError(f'Free values {tuple(x_free)} give a fractional count for run index {b}.')
            counts[b] = int(value)
        return FrequencyVector(tuple(counts), self.spec.k, self.spec.s)


@experimental
def build_inequality_form(spec: OASpec) -> InequalityForm:
    """
    Eliminate the runs with at most t coordinates below s−1 through the RREF of the
    balance system; their bounds 0 ≤ x_b ≤ p_max become inequalities over the rest.
    """
    _require_strength(spec)
    relaxation = standard_relaxation(spec)
    runs = all_runs(spec.k, spec.s)
    top = spec.s - 1
    basic = tuple(i for i, run in enumerate(runs) if sum(level != top for level in run) <= spec.t)
    eliminated = set(basic)
    free = tuple(i for i in range(spec.n_vars) if i not in eliminated)
    order = [*basic, *free]
    rhs = RatMatrix.from_rows([[v] for v in relaxation.b], cols=1)
    r, pivots = rref(relaxation.A.select_columns(order), rhs)
    m = len(basic)
    if pivots != tuple(range(m)):
        raise NotStandardForm(f'{spec.label()}: the eliminated runs are not a basis of the balance system.')
    width = len(order)
    offset = tuple(r[row, width] for row in range(m))
    coeffs = tuple(tuple(r[row, m + j] for j in range(len(free))) for row in range(m))

    builder = LpBuilder(len(free)).bounds(0, spec.cap)
    for row in range(m):
        builder.at_most(coeffs[row], offset[row])
    for row in range(m):
        builder.at_most([-a for a in coeffs[row]], spec.cap - offset[row])
    logger.info('%s: inequality form over %d free runs (%d eliminated)', spec.label(), len(free), m)
    return InequalityForm(
        program=builder.build_integer(),
        spec=spec,
        basic=basic,
        free=free,
        offset=offset,
        coeffs=coeffs,
    )
