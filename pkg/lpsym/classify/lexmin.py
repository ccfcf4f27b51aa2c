"""
< Orbit tests over a stabilizer chain with base 0, 1, …, n−1 >
An element w = u_0·u_1·… of the group is built one level at a time; after level j the
points w(0..j) are final. Reading the image of x under g = w⁻¹ as y_j = x_{w(j)}, the
values y_0..y_j are known once level j is chosen, which turns both tests below into a
level-by-level search. Partial products whose remaining value pattern coincides behave
identically further down, so only one of them is kept.

Ordering (for prefixes): a partial solution fixing x_0..x_{d−1} is beaten by an image that
fixes the same index set and carries a larger value at the first position where they differ.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from lpsym.exceptions import GroupDegreeMismatch
from lpsym.groups import Perm, PermGroup


@dataclass(frozen=True)
class PartialSolution:
    """Values of the prefix x_0..x_{depth−1} fixed by minimum-index branching."""

    values: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if len(self.values) > self.n:
            raise ValueError(f'{len(self.values)} fixed values for {self.n} variables.')

    @property
    def depth(self) -> int:
        return len(self.values)

    @property
    def fixed(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values))

    def child(self, value: int) -> PartialSolution:
        return PartialSolution((*self.values, value), self.n)


def check_group_degree(n: int, group: PermGroup) -> None:
    if group.degree != n:
        raise GroupDegreeMismatch(f'Group of degree {group.degree} acts on {n} variables.')


def is_lex_min(p: PartialSolution, group: PermGroup) -> bool:
    """
    True iff no group element maps the fixed index set {0..d−1} onto itself and carries a
    larger value at the first differing position. Elements moving a fixed index outside
    the prefix give an image that already ranks below p.
    """
    check_group_degree(p.n, group)
    d = p.depth
    if d == 0 or group.is_trivial():
        return True
    x = p.values
    n = p.n
    chain = group.chain
    # (beaten, product); a beaten product already carries a larger value and only has to
    # keep the rest of the prefix inside {0..d−1}
    states: list[tuple[bool, Perm]] = [(False, Perm.identity(n))]
    for j in range(d):
        trans = chain.transversals[j]
        target = x[j]
        nxt: dict[tuple[object, ...], tuple[bool, Perm]] = {}
        for beaten, w in states:
            for beta, u in trans.items():
                src = w(beta)
                if src >= d:
                    continue
                value = x[src]
                if not beaten and value < target:
                    continue
                now_beaten = beaten or value > target
                cand = w * u if beta != j else w
                if now_beaten:
                    key: tuple[object, ...] = (True, *(cand(pt) < d for pt in range(j + 1, n)))
                else:
                    key = (False, *(x[q] if (q := cand(pt)) < d else None for pt in range(j + 1, n)))
                nxt.setdefault(key, (now_beaten, cand))
        states = list(nxt.values())
        if not states:
            return True
    return not any(beaten for beaten, _ in states)


def canonical_image(x: Sequence[int], group: PermGroup) -> tuple[int, ...]:
    """The lexicographically largest vector in the orbit of x (a complete solution)."""
    n = len(x)
    check_group_degree(n, group)
    chain = group.chain
    states: list[Perm] = [Perm.identity(n)]
    best: list[int] = []
    for j in range(n):
        trans = chain.transversals[j]
        top = max(x[w(beta)] for w in states for beta in trans)
        nxt: dict[tuple[int, ...], Perm] = {}
        for w in states:
            for beta, u in trans.items():
                if x[w(beta)] != top:
                    continue
                cand = w * u if beta != j else w
                key = tuple(x[cand(pt)] for pt in range(j + 1, n))
                nxt.setdefault(key, cand)
        best.append(top)
        states = list(nxt.values())
    return tuple(best)
