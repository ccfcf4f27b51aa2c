from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from math import lcm
from typing import TypeVar

from lpsym.exceptions import DegreeMismatch

T = TypeVar('T')

_CYCLE_RE = re.compile(r'\(([^()]*)\)')


class Perm:
    """
    A permutation of {0, …, n−1} stored as its image tuple.

    Composition follows function notation: (p * q)(i) = p(q(i)), i.e. q acts first.
    On coordinate vectors a permutation acts by moving the value at position i to
    position p(i): p(x)_i = x_{p⁻¹(i)}.

    Text form is disjoint-cycle notation with 1-based points, e.g. `(1 2)(3 4 5)`;
    the identity prints as `()`.
    """

    __slots__ = ('images', '_hash')

    def __init__(self, images: Iterable[int], *, check: bool = True) -> None:
        imgs = tuple(images)
        if check and sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f'Not a permutation of 0..{len(imgs) - 1}: {imgs}')
        self.images: tuple[int, ...] = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Perm:
        """Build from 0-based cycles; points not mentioned are fixed."""
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            for k, point in enumerate(cycle):
                if not 0 <= point < n:
                    raise ValueError(f'Point {point} out of range for degree {n}.')
                if point in seen:
                    raise ValueError(f'Point {point} appears in more than one cycle.')
                seen.add(point)
                images[point] = cycle[(k + 1) % len(cycle)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int) -> Perm:
        """Parse 1-based cycle notation such as `(1 2)(3 5 4)` or `()`."""
        stripped = text.strip()
        if _CYCLE_RE.sub('', stripped).strip():
            raise ValueError(f'Malformed cycle notation: {text!r}')
        cycles: list[list[int]] = []
        for body in _CYCLE_RE.findall(stripped):
            tokens = body.replace(',', ' ').split()
            if not tokens:
                continue
            cycles.append([int(tok) - 1 for tok in tokens])
        return cls.from_cycles(n, cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Perm) -> Perm:
        if len(other.images) != len(self.images):
            raise DegreeMismatch(f'Cannot compose degree {self.degree} with degree {other.degree}.')
        mine = self.images
        return Perm([mine[j] for j in other.images], check=False)

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img] = i
        return Perm(inv, check=False)

    def __pow__(self, exponent: int) -> Perm:
        base = self if exponent >= 0 else self.inverse()
        result = Perm.identity(self.degree)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == img for i, img in enumerate(self.images))

    def first_moved(self) -> int:
        """Smallest moved point, or the degree for the identity."""
        return next((i for i, img in enumerate(self.images) if i != img), len(self.images))

    def support(self) -> list[int]:
        return [i for i, img in enumerate(self.images) if i != img]

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point, ordered by that point."""
        seen = [False] * len(self.images)
        out: list[tuple[int, ...]] = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        result = 1
        for cycle in self.cycles():
            result = lcm(result, len(cycle))
        return result

    def act(self, x: Sequence[T]) -> tuple[T, ...]:
        """p(x)_i = x_{p⁻¹(i)}: the entry at position i moves to position p(i)."""
        if len(x) != len(self.images):
            raise DegreeMismatch(f'Vector of length {len(x)} cannot be permuted by degree {self.degree}.')
        out: list[T] = list(x)
        for i, img in enumerate(self.images):
            out[img] = x[i]
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Perm) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(str(p + 1) for p in cycle) + ')' for cycle in cycles)

    def __repr__(self) -> str:
        return f'Perm({list(self.images)})'
