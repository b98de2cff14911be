"""Folded adjacency matrices and the exact determinant."""

import random
from fractions import Fraction

import pytest

from residue_tilings.board import rectangle
from residue_tilings.gaussian import GaussianInt
from residue_tilings.kasteleyn import (
    SignedMatrix,
    build_kasteleyn,
    det_exact,
    signed_sum_via_det,
)
from residue_tilings.tiling import signed_sum


def det_cofactor(rows):
    """Textbook cofactor expansion, the slow oracle."""
    k = len(rows)
    if k == 0:
        return 1
    if k == 1:
        return rows[0][0]
    total = 0
    for col in range(k):
        if rows[0][col] == 0:
            continue
        minor = [
            [row[c] for c in range(k) if c != col] for row in rows[1:]
        ]
        term = rows[0][col] * det_cofactor(minor)
        total += term if col % 2 == 0 else -term
    return total


def test_matrix_validation():
    m = SignedMatrix(((1, 2), (3, 4)))
    assert m.dim == 2
    assert m.entries[1][0] == 3
    with pytest.raises(ValueError):
        SignedMatrix(((1, 2),))
    with pytest.raises(ValueError):
        SignedMatrix(((1.5,),))


def test_known_matrices():
    assert build_kasteleyn(2, 3).entries == ((-1,),)
    assert build_kasteleyn(3, 3).entries == ((-1, -1), (-1, -1))
    # the folded space has one basis vector per even cell
    assert build_kasteleyn(6, 5).dim == 10
    assert build_kasteleyn(1, 5).dim == 0


def test_column_structure():
    # each column holds the -1 neighbor stencil, so entries are 0, -1 or
    # (after folding collisions) -2
    for m, n in [(4, 3), (5, 5), (6, 7), (9, 3)]:
        matrix = build_kasteleyn(m, n)
        for row in matrix.entries:
            assert all(v in (0, -1, -2) for v in row)


def test_det_known_values():
    assert det_exact(SignedMatrix(())) == 1
    assert det_exact(SignedMatrix(((7,),))) == 7
    assert det_exact(SignedMatrix(((1, 2), (3, 4)))) == -2
    assert det_exact(build_kasteleyn(2, 3)) == -1
    assert det_exact(build_kasteleyn(3, 3)) == 0


def test_det_random_matrices_against_cofactor():
    rng = random.Random(20240811)
    for _ in range(1000):
        k = rng.randrange(0, 5)
        rows = tuple(
            tuple(rng.randrange(-4, 5) for _ in range(k)) for _ in range(k)
        )
        expected = det_cofactor([list(r) for r in rows])
        assert det_exact(SignedMatrix(rows)) == expected


def test_det_random_matrices_against_fractions():
    # second oracle: Gaussian elimination over Fraction
    rng = random.Random(97)
    for _ in range(200):
        k = rng.randrange(1, 7)
        rows = [[rng.randrange(-9, 10) for _ in range(k)] for _ in range(k)]
        work = [[Fraction(v) for v in row] for row in rows]
        det = Fraction(1)
        for col in range(k):
            pivot = next(
                (r for r in range(col, k) if work[r][col]), None
            )
            if pivot is None:
                det = Fraction(0)
                break
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det *= work[col][col]
            for r in range(col + 1, k):
                factor = work[r][col] / work[col][col]
                for c in range(col, k):
                    work[r][c] -= factor * work[col][c]
        assert det.denominator == 1
        assert det_exact(SignedMatrix(tuple(tuple(r) for r in rows))) == det


def test_signed_sum_via_det_matches_dp():
    for n in range(1, 8, 2):
        for m in range(1, 9):
            assert GaussianInt(signed_sum_via_det(m, n)) == signed_sum(
                rectangle(m - 1, n - 1)
            )


def test_rejects_even_n():
    with pytest.raises(ValueError):
        build_kasteleyn(3, 4)
    with pytest.raises(ValueError):
        signed_sum_via_det(3, 0)
