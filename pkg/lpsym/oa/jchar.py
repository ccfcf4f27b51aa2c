from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from .indexing import FrequencyVector, SignedArray
from .spec import OASpec


@dataclass(frozen=True)
class JChar:
    subset: tuple[int, ...]
    value: int

    @property
    def r(self) -> int:
        return len(self.subset)


def j_characteristics(y: SignedArray, up_to: int) -> list[JChar]:
    """J_r(ℓ) = Σ_rows Π_{j∈ℓ} y_j for every column subset ℓ with |ℓ| ≤ up_to, J_0(∅) first."""
    k = y.k
    out: list[JChar] = []
    for r in range(min(up_to, k) + 1):
        for subset in combinations(range(k), r):
            out.append(JChar(subset, sum(prod(row[j] for j in subset) for row in y.entries)))
    return out


def vanishing_j(y: SignedArray, t: int) -> bool:
    """True iff J_r(ℓ) = 0 for all 1 ≤ |ℓ| ≤ t, the two-level strength criterion."""
    return all(j.value == 0 for j in j_characteristics(y, t) if j.r >= 1)


def is_oa(array: FrequencyVector | SignedArray | Sequence[Sequence[int]], spec: OASpec) -> bool:
    """Count every t-column projection directly: each level tuple must occur exactly λ times."""
    if isinstance(array, FrequencyVector):
        rows = array.rows()
    elif isinstance(array, SignedArray):
        rows = array.to_levels()
    else:
        rows = [tuple(r) for r in array]
    if len(rows) != spec.N or any(len(r) != spec.k for r in rows):
        return False
    if any(not 0 <= v < spec.s for r in rows for v in r):
        return False
    tuples = list(product(range(spec.s), repeat=spec.t))
    for columns in combinations(range(spec.k), spec.t):
        counts = Counter(tuple(r[c] for c in columns) for r in rows)
        if any(counts[tup] != spec.lam for tup in tuples):
            return False
    return True
