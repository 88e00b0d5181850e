from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from mysticum.algebra.linear import (
    RatMatrix,
    canonical,
    determinant,
    format_rat,
    nullspace,
    rank,
    solve,
    to_rat,
)
from mysticum.scenes import Lcg64


def _random_rows(seed: int, rows: int, cols: int) -> list[list[Fraction]]:
    rng = Lcg64(seed)
    return [[rng.rational(6, 4) for _ in range(cols)] for _ in range(rows)]


def _sympy(rows: list[list[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in rows])


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
def test_determinant_matches_sympy(seed: int) -> None:
    rows = _random_rows(seed, 4, 4)
    expected = _sympy(rows).det()
    assert determinant(rows) == Fraction(int(expected.p), int(expected.q))


@pytest.mark.parametrize("seed", [11, 12, 13])
def test_rank_matches_sympy_on_dependent_rows(seed: int) -> None:
    rows = _random_rows(seed, 3, 5)
    # append two combinations so the rank stays at most 3
    rows.append([a + 2 * b for a, b in zip(rows[0], rows[1])])
    rows.append([a - c for a, c in zip(rows[0], rows[2])])
    assert rank(RatMatrix.from_rows(rows)) == _sympy(rows).rank()


def test_nullspace_vectors_are_annihilated() -> None:
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
    m = RatMatrix.from_rows(rows)
    basis = nullspace(m)
    assert len(basis) == 4 - rank(m) == 2
    for v in basis:
        assert all(x == 0 for x in m.apply(v))


def test_nullspace_of_empty_matrix_is_identity() -> None:
    basis = nullspace(RatMatrix(0, 3, ()))
    assert sorted(basis) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_solve_consistent_and_inconsistent() -> None:
    m = RatMatrix.from_rows([[1, 1], [1, -1]])
    assert solve(m, [3, 1]) == (Fraction(2), Fraction(1))
    singular = RatMatrix.from_rows([[1, 1], [2, 2]])
    assert solve(singular, [1, 3]) is None


def test_canonical_form() -> None:
    assert canonical([-2, 4, 0]) == (1, -2, 0)
    assert canonical([Fraction(1, 2), Fraction(1, 3), 0]) == (3, 2, 0)
    assert canonical([0, -3, 6]) == (0, 1, -2)
    with pytest.raises(ValueError):
        canonical([0, 0, 0])


def test_rational_text_round_trip() -> None:
    assert format_rat(Fraction(6, 2)) == "3"
    assert format_rat(Fraction(-1, 2)) == "-1/2"
    assert to_rat(" -7/3 ") == Fraction(-7, 3)
    with pytest.raises(TypeError):
        to_rat(True)


def test_ragged_matrix_rejected() -> None:
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2], [3]])
