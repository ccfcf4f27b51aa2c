"""
< Equivalence operations on arrays, acting on frequency indices >
An operation f on runs induces the permutation p with p(index(L)) = index(f(L)), so that
p.act(counts) is the frequency vector of the transformed array.

1. `iso_group`: column permutations and per-column symbol permutations, S_s ≀ S_k.
2. `od_group`: two-level only; adds the column operations R_i which, in the 0/1 coding,
   replace every other column L_j by L_j XOR L_i.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

from lpsym.groups import Perm, PermGroup

from .indexing import FrequencyVector, Run, all_runs, freq_index, frequency_vector


def run_permutation(k: int, s: int, op: Callable[[Run], Sequence[int]]) -> Perm:
    return Perm([freq_index(op(run), s) for run in all_runs(k, s)])


def column_swap(k: int, s: int, i: int, j: int) -> Perm:
    def op(run: Run) -> list[int]:
        out = list(run)
        out[i], out[j] = run[j], run[i]
        return out

    return run_permutation(k, s, op)


def symbol_permutation(k: int, s: int, column: int, sigma: Sequence[int]) -> Perm:
    """Relabel the symbols of one column: level v becomes sigma[v]."""

    def op(run: Run) -> list[int]:
        out = list(run)
        out[column] = sigma[run[column]]
        return out

    return run_permutation(k, s, op)


def r_operation(k: int, i: int) -> Perm:
    """R_i on two-level runs: column i is kept, every other column is multiplied by it."""

    def op(run: Run) -> list[int]:
        return [level if j == i else level ^ run[i] for j, level in enumerate(run)]

    return run_permutation(k, 2, op)


def iso_group(k: int, s: int) -> PermGroup:
    gens = [column_swap(k, s, i, i + 1) for i in range(k - 1)]
    transposition = [1, 0, *range(2, s)]
    cycle = [*range(1, s), 0]
    for column in range(k):
        gens.append(symbol_permutation(k, s, column, transposition))
        gens.append(symbol_permutation(k, s, column, cycle))
    return PermGroup(s**k, gens)


def od_group(k: int) -> PermGroup:
    return iso_group(k, 2).extended(r_operation(k, i) for i in range(k))


def apply_to_array(g: Perm, rows: Sequence[Sequence[int]], s: int) -> list[Run]:
    """The transformed array, runs in index order."""
    fv = frequency_vector(rows, s)
    return FrequencyVector(g.act(fv.counts), fv.k, s).rows()
