from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lpsym.exceptions import CosetLimitExceeded, DegreeMismatch, NotASubgroup
from lpsym.groups import (
    Perm,
    PermGroup,
    double_cosets,
    intersect,
    left_coset_key,
    orbit_projector,
    permutation_matrix,
)
from lpsym.linalg import RatMatrix
from lpsym.settings import Settings

from .oracles import brute_force_elements


def _cyclic(n: int) -> PermGroup:
    return PermGroup(n, [Perm([*range(1, n), 0])])


# ---------------------------------------------------------------- Perm


def test_perm__composition_is_function_notation() -> None:
    p = Perm([1, 2, 0])
    q = Perm([1, 0, 2])
    assert (p * q)(0) == p(q(0)) == 2
    assert (p * p.inverse()).is_identity()
    assert p**3 == Perm.identity(3)
    assert p ** -1 == p.inverse()


def test_perm__act_moves_entries_forward() -> None:
    p = Perm([1, 2, 0])
    assert p.act(['a', 'b', 'c']) == ('c', 'a', 'b')
    assert (p * p).act('abc') == p.act(p.act('abc'))


def test_perm__cycle_notation_round_trip() -> None:
    p = Perm.parse('(1 3)(2 5 4)', 6)
    assert p.images == (2, 4, 0, 1, 3, 5)
    assert str(p) == '(1 3)(2 5 4)'
    assert str(Perm.identity(4)) == '()'
    assert Perm.parse('()', 3).is_identity()
    assert p.order() == 6


@pytest.mark.parametrize('text', ['(1 2', '(1 2)(2 3)', '(1 9)', 'x(1 2)'])
def test_perm__bad_cycle_notation(text: str) -> None:
    with pytest.raises(ValueError):
        Perm.parse(text, 3)


def test_perm__validation() -> None:
    with pytest.raises(ValueError):
        Perm([0, 0, 1])
    with pytest.raises(DegreeMismatch):
        Perm([1, 0]) * Perm([0, 1, 2])
    with pytest.raises(DegreeMismatch):
        Perm([1, 0]).act([1, 2, 3])


def test_permutation_matrix__applies_act() -> None:
    p = Perm([2, 0, 1])
    x = tuple(Fraction(v) for v in (1, 2, 3))
    assert permutation_matrix(p).apply(x) == p.act(x)


# ---------------------------------------------------------------- groups


@pytest.mark.parametrize(('n', 'expected'), [(1, 1), (3, 6), (5, 120), (7, 5040)])
def test_symmetric_group_order(n: int, expected: int) -> None:
    assert PermGroup.symmetric(n).order() == expected


def test_group__membership_and_elements() -> None:
    """
    < Stabilizer chain membership agrees with brute-force closure >
    1. Build a small group from two generators.
    2. Compare its order with the closure and check membership of every element.
    3. An odd permutation is not a member of the alternating subgroup.
    """
    # 1
    g = PermGroup(6, [Perm([1, 2, 0, 3, 4, 5]), Perm([0, 1, 2, 4, 5, 3])])

    # 2
    closure = brute_force_elements(g)
    assert g.order() == len(closure) == 9
    assert set(g.elements()) == closure
    assert all(g.contains(x) for x in closure)

    # 3
    alt = PermGroup(4, [Perm([1, 2, 0, 3]), Perm([0, 2, 3, 1])])
    assert alt.order() == 12
    assert Perm([1, 0, 2, 3]) not in alt


def test_group__orbits_and_projector() -> None:
    g = PermGroup(5, [Perm([1, 0, 2, 3, 4]), Perm([0, 1, 3, 4, 2])])
    assert g.orbits() == [[0, 1], [2, 3, 4]]
    e = orbit_projector(g)
    assert e @ e == e
    assert e[0, 1] == e[1, 1]
    assert e[2, 4] * 3 == 1
    assert orbit_projector(PermGroup.trivial(3)) == RatMatrix.identity(3)


def test_group__random_elements_are_members() -> None:
    rng = random.Random(5)
    g = PermGroup.symmetric(6)
    for _ in range(100):
        assert g.contains(g.random_element(rng))


def test_group__subgroup_relations() -> None:
    sym = PermGroup.symmetric(4)
    cyc = _cyclic(4)
    assert cyc.is_subgroup_of(sym)
    assert not sym.is_subgroup_of(cyc)
    assert sym.same_group(PermGroup(4, [Perm([1, 0, 2, 3]), Perm([1, 2, 3, 0])]))
    with pytest.raises(DegreeMismatch):
        cyc.is_subgroup_of(PermGroup.symmetric(5))


# ---------------------------------------------------------------- search


def test_intersect__matches_brute_force() -> None:
    """
    < intersect agrees with the set intersection of the element lists >
    1. Draw pairs of random two-generator subgroups of S6.
    2. Compare |G ∩ H| with the brute-force count.
    """
    rng = random.Random(3)
    for _ in range(100):
        # 1
        g = PermGroup(6, [Perm(rng.sample(range(6), 6)) for _ in range(2)])
        h = PermGroup(6, [Perm(rng.sample(range(6), 6)) for _ in range(2)])

        # 2
        expected = brute_force_elements(g) & brute_force_elements(h)
        result = intersect(g, h)
        assert result.order() == len(expected)
        assert all(x in expected for x in result.generators)


def test_intersect__large_groups_use_subgroup_search() -> None:
    """
    < Intersection of two groups too large to enumerate >
    1. Sym{0..7} and Sym{1..8} on nine points, each of order 8! > the enumeration limit.
    2. Their intersection is Sym{1..7}.
    """
    # 1
    left = PermGroup(9, [Perm.from_cycles(9, [(i, i + 1)]) for i in range(7)])
    right = PermGroup(9, [Perm.from_cycles(9, [(i, i + 1)]) for i in range(1, 8)])

    # 2
    both = intersect(left, right)
    assert both.order() == 5040
    assert all(g(0) == 0 and g(8) == 8 for g in both.generators)


def test_left_coset_key__is_coset_invariant() -> None:
    h = PermGroup(4, [Perm([1, 0, 2, 3])])
    g = Perm([2, 3, 0, 1])
    gh = g * Perm([1, 0, 2, 3])
    assert left_coset_key(g, h.chain) == left_coset_key(gh, h.chain)
    assert left_coset_key(g, h.chain) == min(g, gh)


def test_double_cosets__partition_the_group() -> None:
    """
    < Double cosets H x H of S4 over a point stabilizer >
    1. H = Stab(0) ≅ S3 inside S4 gives two double cosets.
    2. Their sizes add up to |G| and the identity is the first representative.
    """
    # 1
    g = PermGroup.symmetric(4)
    h = PermGroup(4, [Perm([0, 2, 1, 3]), Perm([0, 1, 3, 2])])
    reps = double_cosets(g, h)
    assert len(reps) == 2

    # 2
    assert reps[0].is_identity()
    h_elems = brute_force_elements(h)
    sizes = [len({a * r * b for a in h_elems for b in h_elems}) for r in reps]
    assert sum(sizes) == g.order()


def test_double_cosets__errors() -> None:
    g = PermGroup.symmetric(5)
    h = PermGroup(5, [Perm([1, 0, 2, 3, 4])])
    with pytest.raises(NotASubgroup):
        double_cosets(h, g)
    with pytest.raises(CosetLimitExceeded):
        double_cosets(g, h, settings=Settings(max_cosets=10))
    assert double_cosets(h, h) == [Perm.identity(5)]
