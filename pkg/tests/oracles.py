"""Brute-force references used to cross-check the exact algorithms on small inputs."""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from fractions import Fraction
from itertools import permutations, product

from lpsym.graphs import ColoredGraph
from lpsym.groups import Perm, PermGroup
from lpsym.lp import LinearProgram, LpBuilder, standardize
from lpsym.oa import OASpec, all_runs, is_oa


def brute_force_automorphisms(graph: ColoredGraph) -> list[Perm]:
    return [Perm(p) for p in permutations(range(graph.n_vertices)) if graph.is_automorphism(p)]


def brute_force_elements(group: PermGroup) -> set[Perm]:
    """Closure of the generators under composition."""
    elements = {group.identity()}
    frontier = [group.identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in group.generators:
                y = g * x
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return elements


def brute_force_is_lex_min(values: Sequence[int], group: PermGroup) -> bool:
    """Prefix test by enumeration: only elements mapping {0..d-1} onto itself can beat it."""
    d = len(values)
    for g in brute_force_elements(group):
        if any(g(i) >= d for i in range(d)):
            continue
        image = [0] * d
        for i in range(d):
            image[g(i)] = values[i]
        if tuple(image) > tuple(values):
            return False
    return True


def orbit_count(points: Iterable[Sequence[int]], group: PermGroup) -> int:
    """Number of orbits of `group` on a set of vectors closed under it."""
    elements = brute_force_elements(group)
    seen: set[tuple[int, ...]] = set()
    count = 0
    for x in points:
        key = tuple(x)
        if key in seen:
            continue
        count += 1
        seen.update(g.act(key) for g in elements)
    return count


def all_frequency_vectors(spec: OASpec) -> list[tuple[int, ...]]:
    """Every frequency vector with entries in 0..p_max describing an OA(N, k, s, t)."""
    k, s = spec.k, spec.s
    runs = all_runs(k, s)
    out = []
    for counts in product(range(spec.cap + 1), repeat=s**k):
        if sum(counts) != spec.N:
            continue
        rows = [run for run, c in zip(runs, counts) for _ in range(c)]
        if is_oa(rows, spec):
            out.append(counts)
    return out


def triangle() -> ColoredGraph:
    return ColoredGraph(3, (0, 0, 0), ((0, 1, 0), (0, 2, 0), (1, 2, 0)))


def path3() -> ColoredGraph:
    return ColoredGraph(3, (0, 0, 0), ((0, 1, 0), (1, 2, 0)))


def simplex_lp(n: int) -> LinearProgram:
    """min 0 over {x ≥ 0, Σx = 1}: every permutation is a symmetry."""
    return LpBuilder(n).equal([1] * n, 1).bounds(lower=0).build()


def box_lp(upper: Sequence[int]) -> LinearProgram:
    n = len(upper)
    builder = LpBuilder(n).bounds(lower=0)
    for j, u in enumerate(upper):
        builder.at_most({j: 1}, u)
    return builder.build()


def frac_point(values: Sequence[int | str]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def random_symmetric_lp(rng: random.Random, n: int = 4) -> LinearProgram:
    """
    Standard-form LP in [0, 1]^n whose rows are closed under a random cyclic group.

    Every row is added together with all its images, the objective is constant on orbits
    and the centre (1/2, …, 1/2) satisfies every row, so the group keeps the feasible set
    and the objective.
    """
    group = PermGroup(n, [Perm(rng.sample(range(n), n))])
    elements = brute_force_elements(group)

    def closed(row: tuple[int, ...]) -> list[tuple[int, ...]]:
        return sorted({g.act(row) for g in elements})

    c = [0] * n
    for orbit in group.orbits():
        weight = rng.randint(-2, 2)
        for i in orbit:
            c[i] = weight
    builder = LpBuilder(n).minimize(c)
    if rng.random() < 0.7:
        row = tuple(rng.randint(-2, 2) for _ in range(n))
        if any(row):
            for image in closed(row):
                builder.equal(image, Fraction(sum(image), 2))
    for _ in range(rng.randint(1, 2)):
        # no two inequality rows are distinct positive multiples of each other
        row = tuple(rng.randint(-1, 1) for _ in range(n))
        slack = rng.randint(0, 2)
        if any(row):
            for image in closed(row):
                builder.at_most(image, Fraction(sum(image), 2) + slack)
    return standardize(builder.bounds(0, 1).build()).lp


def random_feasible_lp(rng: random.Random, n: int) -> LinearProgram:
    """
    Feasible LP around a random point x0 in [0, 2]^n, salted with redundant rows and with
    row pairs that force an equality.
    """
    x0 = [Fraction(rng.randint(0, 4), 2) for _ in range(n)]
    builder = LpBuilder(n).minimize([rng.randint(-2, 2) for _ in range(n)]).bounds(0, 2)
    written: list[tuple[list[int], Fraction]] = []
    for _ in range(rng.randint(1, 3)):
        row = [rng.randint(-2, 2) for _ in range(n)]
        rhs = sum(a * v for a, v in zip(row, x0)) + rng.randint(0, 2)
        builder.at_most(row, rhs)
        written.append((row, rhs))
    # implied by two written rows
    (r1, d1), (r2, d2) = written[0], written[-1]
    builder.at_most([a + b for a, b in zip(r1, r2)], d1 + d2 + rng.randint(0, 1))
    # tight at x0 from both sides
    if rng.random() < 0.6:
        row = [rng.randint(-2, 2) for _ in range(n)]
        value = sum(a * v for a, v in zip(row, x0))
        builder.at_most(row, value).at_least(row, value)
    if rng.random() < 0.4:
        builder.at_most({0: 1}, 2)
    return builder.build()
