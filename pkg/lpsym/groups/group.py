from __future__ import annotations

import logging
import random
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction

from lpsym.exceptions import DegreeMismatch
from lpsym.linalg import RatMatrix

from .chain import StabilizerChain
from .perm import Perm

logger = logging.getLogger(__name__)


class PermGroup:
    """
    A permutation group given by generators, with a lazily built stabilizer chain.

    Generators are kept in the given order with identities and repeats removed. The
    chain (base 0..n−1) is built on first use of order / membership / search; after
    that every query is read-only.
    """

    def __init__(self, degree: int, generators: Iterable[Perm] = (), *, chain: StabilizerChain | None = None) -> None:
        if degree < 0:
            raise ValueError('Degree must be non-negative.')
        gens: dict[Perm, None] = {}
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f'Generator of degree {g.degree} in a group of degree {degree}.')
            if not g.is_identity():
                gens.setdefault(g, None)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._chain = chain

    @classmethod
    def generated(cls, generators: Sequence[Perm], degree: int | None = None) -> PermGroup:
        if degree is None:
            if not generators:
                raise ValueError('Degree is required for an empty generator list.')
            degree = generators[0].degree
        return cls(degree, generators)

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls(degree)

    @classmethod
    def symmetric(cls, degree: int) -> PermGroup:
        gens = [Perm.from_cycles(degree, [(i, i + 1)]) for i in range(degree - 1)]
        return cls(degree, gens)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def order(self) -> int:
        return self.chain.order()

    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f'Permutation of degree {p.degree} tested against a group of degree {self.degree}.')
        return self.chain.contains(p)

    def __contains__(self, p: object) -> bool:
        return isinstance(p, Perm) and self.contains(p)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        _check_same_degree(self, other)
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: PermGroup) -> bool:
        return self.is_subgroup_of(other) and self.order() == other.order()

    def extended(self, extra: Iterable[Perm]) -> PermGroup:
        return PermGroup(self.degree, [*self.generators, *extra])

    def orbits(self) -> list[list[int]]:
        """Orbit partition of {0..n−1}, each orbit sorted, orbits ordered by smallest point."""
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, img in enumerate(g.images):
                ri, rj = find(i), find(img)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        classes: dict[int, list[int]] = {}
        for i in range(self.degree):
            classes.setdefault(find(i), []).append(i)
        return sorted(classes.values(), key=lambda orbit: orbit[0])

    def orbit(self, point: int) -> list[int]:
        return next(o for o in self.orbits() if point in o)

    def elements(self) -> Iterator[Perm]:
        return self.chain.elements()

    def random_element(self, rng: random.Random) -> Perm:
        """Uniformly random element (one random transversal element per level)."""
        g = self.identity()
        for trans in self.chain.transversals:
            if len(trans) > 1:
                g = g * trans[rng.choice(sorted(trans))]
        return g

    def __repr__(self) -> str:
        return f'PermGroup(degree={self.degree}, generators={len(self.generators)})'

    def __str__(self) -> str:
        return '<' + ', '.join(str(g) for g in self.generators) + '>'


def _check_same_degree(g: PermGroup, h: PermGroup) -> None:
    if g.degree != h.degree:
        raise DegreeMismatch(f'Groups act on {g.degree} and {h.degree} points.')


def generated(generators: Sequence[Perm], degree: int | None = None) -> PermGroup:
    return PermGroup.generated(generators, degree)


def orbits(group: PermGroup) -> list[list[int]]:
    return group.orbits()


def order(group: PermGroup) -> int:
    return group.order()


def contains(group: PermGroup, p: Perm) -> bool:
    return group.contains(p)


def orbit_projector(group: PermGroup) -> RatMatrix:
    """E with E_ij = 1/|O| when i and j lie in the same orbit O, else 0."""
    n = group.degree
    entries = [Fraction(0)] * (n * n)
    for orbit in group.orbits():
        weight = Fraction(1, len(orbit))
        for i in orbit:
            for j in orbit:
                entries[i * n + j] = weight
    return RatMatrix(n, n, tuple(entries))


def permutation_matrix(p: Perm) -> RatMatrix:
    """Π with Π·x = p(x), i.e. Π[p(i)][i] = 1."""
    n = p.degree
    entries = [Fraction(0)] * (n * n)
    for i, img in enumerate(p.images):
        entries[img * n + i] = Fraction(1)
    return RatMatrix(n, n, tuple(entries))
