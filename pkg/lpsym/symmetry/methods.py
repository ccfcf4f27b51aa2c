"""
< Symmetry groups of a standard-form linear program >
1. `formulation_group`: permutations of the variables that map the written system onto
   itself, from the automorphisms of the variable/row graph.
2. `g_null`: permutations stabilizing Row(A) (automorphisms of the colored graph of the
   projector P onto Row(A), colored by c) intersected with the formulation group of (B, d, c).
3. `g_lp_c`: the largest c-preserving subgroup of G^LP. Accept G^Null outright when its
   Fix space meets the feasible set; otherwise walk double-coset representatives of G^Null
   over the formulation group, keeping each one whose extended group still has a
   feasible Fix space.
4. `g_lp`: the full G^LP. Walk double cosets of G^LP_feas (zero objective) over G^LP_c and
   keep every representative that leaves the reduced objective unchanged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from lpsym.enums import GroupTier
from lpsym.exceptions import CosetLimitExceeded, NotStandardForm
from lpsym.graphs import automorphisms, formulation_graph, graph_from_matrix
from lpsym.groups import Perm, PermGroup, double_cosets, intersect
from lpsym.linalg import RatMatrix, RatVector, row_space_projector
from lpsym.lp import LinearProgram, feasible_point, has_full_row_rank
from lpsym.settings import DEFAULT_SETTINGS, Settings
from lpsym.utils import value_classes

from .reduced import reduce_objective

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymmetryResult:
    group: PermGroup
    tier: GroupTier
    certificates: tuple[RatVector, ...] = ()

    @property
    def order(self) -> int:
        return self.group.order()


def _require_standard(lp: LinearProgram) -> None:
    if not has_full_row_rank(lp):
        raise NotStandardForm(f'Equality matrix with {lp.m_eq} rows does not have full row rank.')


def formulation_group(lp: LinearProgram) -> PermGroup:
    """G(A, b, B, d, c): graph automorphisms restricted to the variable vertices."""
    n = lp.n
    aut = automorphisms(formulation_graph(lp))
    gens = [Perm(g.images[:n], check=False) for g in aut.generators]
    group = PermGroup(n, gens)
    logger.debug('formulation group of %d variables has order %d', n, group.order())
    return group


def fix_lp(lp: LinearProgram, group: PermGroup) -> LinearProgram:
    """
    The LP restricted to the Fix space of the group.

    Fix(G) = ker(I − E) is the set of vectors constant on every orbit, added here as
    x_i − x_r = 0 for each orbit point i and its orbit's smallest point r.
    """
    rows: list[list[int]] = []
    for orbit in group.orbits():
        root = orbit[0]
        for i in orbit[1:]:
            row = [0] * lp.n
            row[i] = 1
            row[root] = -1
            rows.append(row)
    if not rows:
        return lp
    return lp.with_equalities(RatMatrix.from_rows(rows, cols=lp.n), [Fraction(0)] * len(rows))


def g_null(lp: LinearProgram) -> PermGroup:
    """
    Stab(Row(A)) ∩ G(B, d, c).

    Raises
    ------
    NotStandardForm
        If A does not have full row rank.
    """
    _require_standard(lp)
    p = row_space_projector(lp.A)
    c_colors, _ = value_classes(lp.c)
    stab = automorphisms(graph_from_matrix(p, c_colors)).group()
    form = formulation_group(lp.without_equalities())
    group = intersect(stab, form)
    logger.info('G^Null: |Stab(Row(A))| = %d, |G(B,d,c)| = %d, intersection %d', stab.order(), form.order(), group.order())
    return group


def _walk_limit(reps: list[Perm], settings: Settings) -> None:
    if len(reps) > settings.max_double_cosets:
        raise CosetLimitExceeded(f'{len(reps)} double cosets exceed the cap {settings.max_double_cosets}.')


def _lp_c_with_certificates(lp: LinearProgram, settings: Settings) -> tuple[PermGroup, list[RatVector]]:
    _require_standard(lp)
    null = g_null(lp)
    point = feasible_point(fix_lp(lp, null))
    if point is not None:
        logger.info('G^LP_c = G^Null (order %d): Fix space is feasible', null.order())
        return null, [point]

    current = formulation_group(lp)
    certificates: list[RatVector] = []
    base_point = feasible_point(fix_lp(lp, current))
    if base_point is not None:
        certificates.append(base_point)
    reps = double_cosets(null, current, settings=settings)
    _walk_limit(reps, settings)
    logger.debug('walking %d double cosets of G^Null over the formulation group', len(reps))
    for g in reps[1:]:
        if current.contains(g):
            continue
        candidate = current.extended([g])
        point = feasible_point(fix_lp(lp, candidate))
        if point is not None:
            current = candidate
            certificates.append(point)
    logger.info('G^LP_c has order %d (G^Null %d)', current.order(), null.order())
    return current, certificates


def g_lp_c(lp: LinearProgram, *, settings: Settings = DEFAULT_SETTINGS) -> PermGroup:
    """
    The largest subgroup of G^LP that preserves c.

    Raises
    ------
    NotStandardForm
        If A does not have full row rank.
    CosetLimitExceeded
        If the double-coset walk exceeds the configured caps.
    """
    return _lp_c_with_certificates(lp, settings)[0]


def _lp_with_certificates(lp: LinearProgram, settings: Settings) -> tuple[PermGroup, list[RatVector]]:
    _require_standard(lp)
    lp_c, certificates = _lp_c_with_certificates(lp, settings)
    feasible, _ = _lp_c_with_certificates(lp.without_objective(), settings)
    if feasible.order() == lp_c.order():
        return lp_c, certificates
    base = reduce_objective(lp)
    reps = double_cosets(feasible, lp_c, settings=settings)
    _walk_limit(reps, settings)
    current = lp_c
    for g in reps[1:]:
        if current.contains(g):
            continue
        if reduce_objective(lp, g).same_as(base):
            current = current.extended([g])
    logger.info('G^LP has order %d (G^LP_c %d, G^LP_feas %d)', current.order(), lp_c.order(), feasible.order())
    return current, certificates


def g_lp(lp: LinearProgram, *, settings: Settings = DEFAULT_SETTINGS) -> PermGroup:
    """
    The symmetry group G^LP: permutations mapping feasible points to feasible points of
    equal objective value.

    Raises
    ------
    NotStandardForm
        If A does not have full row rank.
    CosetLimitExceeded
        If a double-coset walk exceeds the configured caps.
    """
    return _lp_with_certificates(lp, settings)[0]


def compute_symmetry(
    lp: LinearProgram,
    tier: GroupTier | str = GroupTier.LP,
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> SymmetryResult:
    tier = GroupTier.from_name(tier)
    match tier:
        case GroupTier.FORMULATION:
            return SymmetryResult(formulation_group(lp), tier)
        case GroupTier.NULL:
            return SymmetryResult(g_null(lp), tier)
        case GroupTier.LP_C:
            group, certs = _lp_c_with_certificates(lp, settings)
            return SymmetryResult(group, tier, tuple(certs))
        case GroupTier.LP:
            group, certs = _lp_with_certificates(lp, settings)
            return SymmetryResult(group, tier, tuple(certs))
        case _:
            raise ValueError(f'Tier {tier} applies to orthogonal-array formulations only.')
