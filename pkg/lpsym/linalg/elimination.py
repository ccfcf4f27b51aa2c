"""
< Exact Gaussian elimination over the rationals >
1. `rref` returns the unique reduced row echelon form of [M | augment] and its pivot columns.
2. `independent_rows` picks, in index order, a maximal linearly independent set of rows.
3. `row_space_projector` builds P = Aᵀ(AAᵀ)⁻¹A; the Gram inverse is computed fraction-free
   (Bareiss) on an integer rescaling of A, so intermediate growth stays polynomial.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import lcm
from typing import NamedTuple

from lpsym.exceptions import SingularGram

from .matrix import RatMatrix

logger = logging.getLogger(__name__)


class Rref(NamedTuple):
    matrix: RatMatrix
    pivot_cols: tuple[int, ...]


def rref(m: RatMatrix, augment: RatMatrix | None = None) -> Rref:
    """
    Reduced row echelon form of [m | augment].

    Parameters
    ----------
    m:
        Coefficient matrix.
    augment:
        Optional right-hand block with the same row count (e.g. the rhs column b).

    Returns
    -------
    Rref
        (R, pivot_cols). R keeps the row count of the input (zero rows at the bottom);
        pivot_cols is strictly increasing and may contain augment columns, which is how
        an inconsistent system shows up. `rank(m)` counts only pivots below m.cols.
    """
    full = m if augment is None else m.hstack(augment)
    rows = full.row_list()
    n_rows, n_cols = full.rows, full.cols
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r >= n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        pivot_row = rows[r]
        for i in range(n_rows):
            if i == r:
                continue
            factor = rows[i][col]
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(col)
        r += 1
    matrix = RatMatrix(n_rows, n_cols, tuple(x for row in rows for x in row))
    return Rref(matrix, tuple(pivots))


def rank(m: RatMatrix) -> int:
    return len(rref(m).pivot_cols)


def independent_rows(m: RatMatrix) -> list[int]:
    """Indices of a maximal independent row subset, preferring lower indices."""
    basis: list[tuple[int, list[Fraction]]] = []
    kept: list[int] = []
    for i in range(m.rows):
        v = list(m.row(i))
        for col, b in basis:
            factor = v[col]
            if factor:
                v = [a - factor * x for a, x in zip(v, b)]
        lead = next((j for j, x in enumerate(v) if x != 0), None)
        if lead is None:
            continue
        scale = v[lead]
        v = [x / scale for x in v]
        # keep the basis fully reduced on its pivot columns
        for idx, (col, b) in enumerate(basis):
            factor = b[lead]
            if factor:
                basis[idx] = (col, [a - factor * x for a, x in zip(b, v)])
        basis.append((lead, v))
        kept.append(i)
    return kept


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    denom = 1
    for x in m.entries:
        denom = lcm(denom, x.denominator)
    return [[int(x * denom) for x in m.row(i)] for i in range(m.rows)]


def bareiss_inverse(g: list[list[int]]) -> list[list[Fraction]]:
    """
    Inverse of a square integer matrix by fraction-free Gauss-Jordan elimination.

    After step k every entry is a (k+1)-minor of the input (Sylvester's identity), so the
    integer division by the previous pivot is exact. At the end each diagonal entry equals
    ±det and the right block holds the matching adjugate rows.

    Raises
    ------
    SingularGram
        If the matrix is singular.
    """
    p = len(g)
    aug = [list(row) + [1 if i == j else 0 for j in range(p)] for i, row in enumerate(g)]
    prev = 1
    for k in range(p):
        pivot = next((i for i in range(k, p) if aug[i][k] != 0), None)
        if pivot is None:
            raise SingularGram(f'Gram matrix is singular (rank < {p}).')
        if pivot != k:
            aug[k], aug[pivot] = aug[pivot], aug[k]
        pk = aug[k][k]
        row_k = aug[k]
        for i in range(p):
            if i == k:
                continue
            row_i = aug[i]
            aik = row_i[k]
            aug[i] = [(pk * a - aik * b) // prev for a, b in zip(row_i, row_k)]
        prev = pk
    return [[Fraction(aug[i][p + j], aug[i][i]) for j in range(p)] for i in range(p)]


def row_space_projector(a: RatMatrix) -> RatMatrix:
    """
    Orthogonal projector onto the row space of `a`: P = Aᵀ(AAᵀ)⁻¹A.

    A zero-row matrix yields the zero n×n matrix.

    Raises
    ------
    SingularGram
        If A does not have full row rank.
    """
    n = a.cols
    if a.rows == 0:
        return RatMatrix.zeros(n, n)
    ints = _integer_rows(a)
    gram = [[sum(x * y for x, y in zip(ri, rj)) for rj in ints] for ri in ints]
    inv = bareiss_inverse(gram)
    # W = G⁻¹·A_int, then P = A_intᵀ·W
    m = a.rows
    w = [
        [sum((inv[i][r] * ints[r][j] for r in range(m) if ints[r][j]), Fraction(0)) for j in range(n)]
        for i in range(m)
    ]
    entries: list[Fraction] = []
    for i in range(n):
        col_i = [ints[r][i] for r in range(m)]
        for j in range(n):
            entries.append(sum((col_i[r] * w[r][j] for r in range(m) if col_i[r]), Fraction(0)))
    logger.debug('row-space projector built: %d x %d from %d rows', n, n, m)
    return RatMatrix(n, n, tuple(entries))
