from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lpsym.exceptions import SingularGram
from lpsym.linalg import (
    RatMatrix,
    bareiss_inverse,
    format_rat,
    independent_rows,
    rank,
    row_space_projector,
    rref,
    to_rat,
)


def test_to_rat__accepts_exact_forms_only() -> None:
    """
    < to_rat accepts ints, Fractions and p/q text and rejects decimals >
    1. Convert int, Fraction and text.
    2. Decimal text and floats raise.
    """
    # 1
    assert to_rat(3) == Fraction(3)
    assert to_rat(Fraction(1, 2)) == Fraction(1, 2)
    assert to_rat(' -2/6 ') == Fraction(-1, 3)

    # 2
    with pytest.raises(ValueError):
        to_rat('0.5')
    with pytest.raises(TypeError):
        to_rat(0.5)  # type: ignore[arg-type]
    with pytest.raises(TypeError):
        to_rat(True)


def test_format_rat() -> None:
    assert format_rat(Fraction(4, 2)) == '2'
    assert format_rat(Fraction(-3, 6)) == '-1/2'


def test_matrix__shape_checks() -> None:
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2]], cols=3)
    empty = RatMatrix.empty(4)
    assert empty.shape == (0, 4)
    assert RatMatrix.from_rows([], cols=2).shape == (0, 2)


def test_matrix__products_and_permutation() -> None:
    m = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert (m @ RatMatrix.identity(2)) == m
    assert m.T.row(0) == (Fraction(1), Fraction(3))
    assert m.apply([Fraction(1), Fraction(1)]) == (Fraction(3), Fraction(7))
    # column 0 moves to column 1
    assert m.permute_columns([1, 0]).row(0) == (Fraction(2), Fraction(1))


def test_rref__pivots_and_inconsistency() -> None:
    """
    < rref reports augment pivots for an inconsistent system >
    1. Consistent system: pivots stay inside the coefficient block.
    2. x + y = 1, x + y = 2: the augment column becomes a pivot.
    """
    # 1
    a = RatMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    b = RatMatrix.from_rows([[2], [3]])
    r, pivots = rref(a, b)
    assert pivots == (0, 1)
    assert r.row(0) == (Fraction(1), Fraction(0), Fraction(-1), Fraction(-1))

    # 2
    _, pivots = rref(RatMatrix.from_rows([[1, 1], [1, 1]]), RatMatrix.from_rows([[1], [2]]))
    assert pivots == (0, 2)


def test_independent_rows__prefers_low_indices() -> None:
    m = RatMatrix.from_rows([[1, 0, 1], [2, 0, 2], [0, 1, 0], [1, 1, 1]])
    assert independent_rows(m) == [0, 2]
    assert rank(m) == 2


def test_bareiss_inverse__matches_identity() -> None:
    g = [[4, 2, 0], [2, 3, 1], [0, 1, 5]]
    inv = bareiss_inverse(g)
    for i in range(3):
        for j in range(3):
            assert sum(g[i][r] * inv[r][j] for r in range(3)) == (1 if i == j else 0)


def test_bareiss_inverse__singular() -> None:
    with pytest.raises(SingularGram):
        bareiss_inverse([[1, 2], [2, 4]])


def test_row_space_projector__idempotent_and_symmetric() -> None:
    """
    < P = Aᵀ(AAᵀ)⁻¹A is a symmetric idempotent fixing the rows of A >
    1. Draw random integer matrices of full row rank.
    2. Check P² = P, Pᵀ = P and P·aᵢ = aᵢ for every row.
    """
    rng = random.Random(7)
    checked = 0
    while checked < 100:
        # 1
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(3)]
        a = RatMatrix.from_rows(rows)
        if rank(a) != 3:
            continue
        p = row_space_projector(a)

        # 2
        assert p @ p == p
        assert p.is_symmetric()
        for i in range(a.rows):
            assert p.apply(a.row(i)) == a.row(i)
        checked += 1


def test_row_space_projector__rank_deficient() -> None:
    with pytest.raises(SingularGram):
        row_space_projector(RatMatrix.from_rows([[1, 1], [2, 2]]))
    assert row_space_projector(RatMatrix.empty(3)) == RatMatrix.zeros(3, 3)
