"""
< Deterministic Schreier-Sims over the fixed base 0, 1, …, n−1 >
1. Level l holds strong generators fixing 0..l−1 and a transversal {β: u} with u(l) = β.
2. Levels are completed from the deepest up: every Schreier generator of level l is sifted
   through levels l+1.. ; a non-trivial residue h that fails at level j becomes a strong
   generator of levels l+1..j and processing restarts at level j.
3. Transversals only grow (old entries are kept), so a Schreier generator checked once never
   needs re-checking; each level remembers the (orbit point, generator) pairs already done.

With the full ascending base, the images of 0..l of any group element are fixed after the
choices at levels 0..l, which the backtrack searches in this package rely on.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator

from .perm import Perm

logger = logging.getLogger(__name__)


class StabilizerChain:
    def __init__(self, degree: int, generators: Iterable[Perm] = ()) -> None:
        self.degree = degree
        self._identity = Perm.identity(degree)
        self.strong: list[list[Perm]] = [[] for _ in range(degree)]
        self.transversals: list[dict[int, Perm]] = [{level: self._identity} for level in range(degree)]
        self._inverses: list[dict[int, Perm]] = [{level: self._identity} for level in range(degree)]
        self._checked: list[set[tuple[int, int]]] = [set() for _ in range(degree)]
        self.extend(generators)

    def _grow_orbit(self, level: int) -> None:
        trans = self.transversals[level]
        queue = list(trans)
        k = 0
        while k < len(queue):
            beta = queue[k]
            k += 1
            u = trans[beta]
            for s in self.strong[level]:
                gamma = s(beta)
                if gamma not in trans:
                    trans[gamma] = s * u
                    queue.append(gamma)

    def inverse_at(self, level: int, beta: int) -> Perm:
        cache = self._inverses[level]
        inv = cache.get(beta)
        if inv is None:
            inv = self.transversals[level][beta].inverse()
            cache[beta] = inv
        return inv

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """
        Strip g through levels start.. ; returns (residue, level of failure).

        The failure level equals the degree when g sifts to the identity, i.e. g
        belongs to the chain's group (provided g fixes 0..start−1).
        """
        for level in range(start, self.degree):
            beta = g(level)
            if beta == level:
                continue
            if beta not in self.transversals[level]:
                return g, level
            g = self.inverse_at(level, beta) * g
        return g, self.degree

    def _add_strong(self, h: Perm, levels: range) -> None:
        for level in levels:
            self.strong[level].append(h)
            self._grow_orbit(level)

    def _schreier_failure(self, level: int) -> tuple[Perm, int] | None:
        trans = self.transversals[level]
        checked = self._checked[level]
        for beta in list(trans):
            u = trans[beta]
            for k, s in enumerate(self.strong[level]):
                if (beta, k) in checked:
                    continue
                checked.add((beta, k))
                gamma = s(beta)
                schreier = self.inverse_at(level, gamma) * (s * u)
                if schreier.is_identity():
                    continue
                residue, fail = self.sift(schreier, level + 1)
                if fail < self.degree:
                    return residue, fail
        return None

    def extend(self, generators: Iterable[Perm]) -> bool:
        """Add generators (skipping members); returns True if the group grew."""
        grew = False
        top = -1
        for g in generators:
            if g.degree != self.degree:
                raise ValueError(f'Generator degree {g.degree} != chain degree {self.degree}.')
            residue, fail = self.sift(g)
            if fail == self.degree:
                continue
            # residue fixes 0..fail-1, so it belongs to every level up to `fail`
            self._add_strong(residue, range(0, fail + 1))
            top = max(top, fail)
            grew = True
        if not grew:
            return False
        level = top
        while level >= 0:
            failure = self._schreier_failure(level)
            if failure is None:
                level -= 1
                continue
            h, j = failure
            self._add_strong(h, range(level + 1, j + 1))
            level = j
        logger.debug('stabilizer chain of degree %d now has order %d', self.degree, self.order())
        return True

    def order(self) -> int:
        result = 1
        for trans in self.transversals:
            result *= len(trans)
        return result

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        return self.sift(g)[1] == self.degree

    def orbit_at(self, level: int) -> list[int]:
        return sorted(self.transversals[level])

    def strong_generators(self) -> list[Perm]:
        seen: dict[Perm, None] = {}
        for gens in self.strong:
            for g in gens:
                seen.setdefault(g, None)
        return list(seen)

    def elements(self) -> Iterator[Perm]:
        """All elements as products u_0 * u_1 * … (one transversal element per level)."""
        levels = [lvl for lvl in range(self.degree) if len(self.transversals[lvl]) > 1]

        def walk(k: int, prefix: Perm) -> Iterator[Perm]:
            if k == len(levels):
                yield prefix
                return
            trans = self.transversals[levels[k]]
            for beta in sorted(trans):
                yield from walk(k + 1, prefix * trans[beta])

        yield from walk(0, self._identity)
