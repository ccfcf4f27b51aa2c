from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

import pytest

from lpsym.enums import GroupTier
from lpsym.exceptions import NotStandardForm
from lpsym.groups import Perm, PermGroup
from lpsym.linalg import RatMatrix, dot, rank
from lpsym.lp import LinearProgram, LpBuilder, is_feasible, sample_points, standardize
from lpsym.oa import OASpec, build_ilp_bf, iso_group, od_group, r_operation, standard_relaxation
from lpsym.symmetry import (
    compute_symmetry,
    fix_lp,
    formulation_group,
    g_lp,
    g_lp_c,
    g_null,
    reduce_objective,
)

from .oracles import random_symmetric_lp, simplex_lp

BLOCK_SWAP = Perm([2, 3, 0, 1])


def _two_blocks(c: list[int], *, written_with_total: bool = False) -> LinearProgram:
    """x0 + x1 = 1, x2 + x3 = 1, x ≥ 0; optionally with the first row replaced by Σx = 2."""
    builder = LpBuilder(4).minimize(c)
    if written_with_total:
        builder.equal([1, 1, 1, 1], 2).equal([1, 1, 0, 0], 1)
    else:
        builder.equal([1, 1, 0, 0], 1).equal([0, 0, 1, 1], 1)
    return builder.bounds(lower=0).build()


def _shifted_line() -> LinearProgram:
    """x0 − x1 = 1, 0 ≤ x0 + x1 ≤ 4: the swap preserves Row(A) and (B, d) but moves the line."""
    return LpBuilder(2).equal([1, -1], 1).at_least([1, 1], 0).at_most([1, 1], 4).build()


# ---------------------------------------------------------------- small programs


def test_simplex__every_tier_is_the_symmetric_group() -> None:
    lp = simplex_lp(4)
    for tier in (GroupTier.FORMULATION, GroupTier.NULL, GroupTier.LP_C, GroupTier.LP):
        assert compute_symmetry(lp, tier).order == 24


def test_g_null__sees_past_the_written_rows() -> None:
    """
    < G^Null does not depend on how the equality rows are written >
    1. Write the two-block system with Σx = 2 as its first row.
    2. The formulation group only swaps inside the blocks; G^Null and G^LP also swap the blocks.
    """
    # 1
    lp = _two_blocks([0, 0, 0, 0], written_with_total=True)

    # 2
    assert formulation_group(lp).order() == 4
    assert g_null(lp).order() == 8
    assert BLOCK_SWAP in g_lp(lp)


def test_g_lp__objective_constant_on_the_affine_hull() -> None:
    """
    < An objective that is constant on Ax = b does not restrict G^LP >
    1. c = (1, 1, 0, 0) equals 1 on every feasible point.
    2. G^LP_c keeps c and has order 4; G^LP adds the block swap and has order 8.
    3. The reduced objectives of c and of c permuted by the block swap coincide.
    """
    # 1
    lp = _two_blocks([1, 1, 0, 0])

    # 2
    assert g_lp_c(lp).order() == 4
    full = g_lp(lp)
    assert full.order() == 8
    assert BLOCK_SWAP in full

    # 3
    base = reduce_objective(lp)
    assert base.free_vars == (1, 3)
    assert base.a == 1
    assert base.c_hat == (Fraction(0), Fraction(0))
    assert reduce_objective(lp, BLOCK_SWAP).same_as(base)


def test_g_lp__objective_that_separates_blocks() -> None:
    lp = _two_blocks([1, 0, 0, 0])
    group = g_lp(lp)
    assert group.order() == 2
    assert Perm([0, 1, 3, 2]) in group
    assert not reduce_objective(lp, BLOCK_SWAP).same_as(reduce_objective(lp))


def test_g_lp_c__rejects_null_elements_with_empty_fix_space() -> None:
    """
    < The walk over G^Null drops elements whose Fix space misses the feasible set >
    1. The swap lies in G^Null but maps the line x0 − x1 = 1 to x0 − x1 = −1.
    2. Fix(⟨swap⟩) is infeasible, so G^LP_c and G^LP are trivial.
    3. The certificate is a feasible point of the program.
    """
    # 1
    lp = _shifted_line()
    swap = Perm([1, 0])
    assert swap in g_null(lp)

    # 2
    assert not is_feasible(fix_lp(lp, PermGroup(2, [swap])))
    result = compute_symmetry(lp, GroupTier.LP_C)
    assert result.order == 1
    assert g_lp(lp).order() == 1

    # 3
    assert len(result.certificates) == 1
    assert lp.contains(result.certificates[0])


def test_fix_lp__adds_orbit_rows() -> None:
    lp = simplex_lp(3)
    fixed = fix_lp(lp, PermGroup.symmetric(3))
    assert fixed.m_eq == 3
    assert fixed.contains((Fraction(1, 3),) * 3)
    assert fix_lp(lp, PermGroup.trivial(3)) is lp


def test_formulation_group__recovers_after_standardize() -> None:
    """
    < A redundant cut hides symmetry from the formulation group but not from G^LP >
    1. Add x0 <= 1, implied by x0 + x1 = 1 and x1 >= 0, to the two-block program.
    2. The cut singles out x0 and the formulation group drops to order 2.
    3. standardize removes the cut and the formulation group is back to 8; G^LP is 8 either way.
    """
    # 1
    builder = LpBuilder(4).equal([1, 1, 0, 0], 1).equal([0, 0, 1, 1], 1).bounds(lower=0)
    lp = builder.at_most([1, 0, 0, 0], 1).build()

    # 2
    assert formulation_group(lp).order() == 2

    # 3
    report = standardize(lp)
    assert report.dropped_inequalities == (4,)
    assert formulation_group(report.lp).order() == 8
    assert g_lp(report.lp).order() == 8


def test_certificates_lie_in_the_fix_space() -> None:
    result = compute_symmetry(simplex_lp(4), 'lp_c')
    assert result.tier is GroupTier.LP_C
    assert result.certificates == ((Fraction(1, 4),) * 4,)


def test_rank_deficient_equalities_are_rejected() -> None:
    lp = LpBuilder(2).equal([1, 1], 1).equal([2, 2], 2).bounds(lower=0).build()
    with pytest.raises(NotStandardForm):
        g_null(lp)
    with pytest.raises(NotStandardForm):
        g_lp(lp)
    with pytest.raises(NotStandardForm):
        reduce_objective(lp)


def test_compute_symmetry__lpleq_is_oa_only() -> None:
    with pytest.raises(ValueError):
        compute_symmetry(simplex_lp(2), GroupTier.LPLEQ)


# ---------------------------------------------------------------- orthogonal-array formulations


@pytest.mark.parametrize(('k', 't', 'order'), [(3, 1, 48), (3, 2, 48), (4, 2, 384)])
def test_formulation_group_of_balance_ilp(k: int, t: int, order: int) -> None:
    spec = OASpec.create(N=2**t, k=k, s=2, t=t)
    group = formulation_group(build_ilp_bf(spec).lp)
    assert group.order() == order
    assert group.same_group(iso_group(k, 2))


@pytest.mark.parametrize('k', [2, 3, 4])
def test_lp_group_of_strength_one(k: int) -> None:
    spec = OASpec.create(N=2, k=k, s=2, t=1)
    assert g_lp(standard_relaxation(spec)).order() == 2**k * factorial(k)


def test_lp_group_of_oa_3_2_2() -> None:
    lp = standard_relaxation(OASpec.create(N=4, k=3, s=2, t=2))
    group = g_lp(lp)
    assert group.order() == 1152
    assert od_group(3).is_subgroup_of(group)


def test_lp_group_of_oa_4_2_3_excludes_r_operation() -> None:
    lp = standard_relaxation(OASpec.create(N=8, k=4, s=2, t=3))
    group = g_lp(lp)
    assert group.order() > 1920
    assert r_operation(4, 0) not in group


@pytest.mark.slow
def test_lp_group_of_oa_4_2_2_is_the_od_group() -> None:
    lp = standard_relaxation(OASpec.create(N=4, k=4, s=2, t=2))
    group = g_lp(lp)
    assert group.order() == 1920
    assert r_operation(4, 0) in group
    assert group.same_group(od_group(4))


def test_lp_group_of_full_strength_is_symmetric() -> None:
    # t = k pins every run to λ, so nothing distinguishes the variables
    lp = standard_relaxation(OASpec.create(N=4, k=2, s=2, t=2))
    assert g_lp(lp).order() == 24


@pytest.mark.slow
@pytest.mark.parametrize(('k', 't'), [(5, 2), (5, 4)])
def test_lp_group_contains_the_od_group_for_even_strength(k: int, t: int) -> None:
    lp = standard_relaxation(OASpec.create(N=2**t, k=k, s=2, t=t))
    assert od_group(k).is_subgroup_of(g_lp(lp))


# ---------------------------------------------------------------- random programs


def test_full_dimensional_lp__lp_group_is_the_formulation_group() -> None:
    """
    < Without equalities or redundant rows the LP group is the formulation group >
    1. {0 ≤ x ≤ 1, x0 + x1 ≤ 3/2, x2 + x3 ≤ 3/2} is already in standard form.
    2. Both groups are the order-8 group of the two pairs.
    """
    # 1
    lp = (
        LpBuilder(4)
        .bounds(0, 1)
        .at_most([1, 1, 0, 0], Fraction(3, 2))
        .at_most([0, 0, 1, 1], Fraction(3, 2))
        .build()
    )
    assert not standardize(lp).changed

    # 2
    form = formulation_group(lp)
    assert form.order() == 8
    assert g_lp(lp).same_group(form)


@pytest.mark.slow
def test_random_lps__group_properties() -> None:
    """
    < The four groups of random symmetric programs satisfy their defining properties >
    1. Draw a standard-form program in [0, 1]^4 whose rows are closed under a random cycle.
    2. formulation ≤ G^LP_c ≤ G^Null and G^LP_c ≤ G^LP.
    3. Every G^Null generator g keeps Row(A): rank [A; A·Πᵀ] = rank A.
    4. Every G^LP generator maps sampled feasible points to feasible points of equal cost.
    5. Without equalities G^LP equals the formulation group.
    """
    rng = random.Random(2024)
    for case in range(100):
        # 1
        lp = random_symmetric_lp(rng)
        n = lp.n

        # 2
        form = formulation_group(lp)
        null = g_null(lp)
        lp_c = g_lp_c(lp)
        full = g_lp(lp)
        assert form.is_subgroup_of(lp_c)
        assert lp_c.is_subgroup_of(null)
        assert lp_c.is_subgroup_of(full)

        # 3
        rows = [lp.A.row(i) for i in range(lp.m_eq)]
        for g in null.generators:
            stacked = RatMatrix.from_rows(rows + [g.act(row) for row in rows], cols=n)
            assert rank(stacked) == rank(lp.A)

        # 4
        points = sample_points(lp, 20, seed=case)
        assert points
        for g in full.generators:
            for x in points:
                image = g.act(x)
                assert lp.contains(image)
                assert dot(lp.c, image) == dot(lp.c, x)

        # 5
        if lp.m_eq == 0:
            assert full.same_group(form)
