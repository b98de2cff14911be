"""Tiling enumeration, the profile DP, and flip moves."""

import pytest

from residue_tilings.board import Board, rectangle
from residue_tilings.gaussian import GaussianInt
from residue_tilings.tiling import (
    Domino,
    SizeLimitError,
    Tiling,
    count_tilings,
    enumerate_tilings,
    flip_at,
    flip_moves,
    horizontal_count,
    is_totally_vertical,
    normalize_to_vertical,
    signed_sum,
    signed_sum_bruteforce,
    totally_vertical_tiling,
    transpose_tiling,
)

# number of tilings of the 2xN strip is the Fibonacci sequence
FIB = [1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_domino_normalizes_order():
    d = Domino.of((2, 1), (1, 1))
    assert d.a == (1, 1) and d.b == (2, 1)
    assert d.horizontal
    assert not Domino.of((1, 1), (1, 2)).horizontal
    assert d.cells == ((1, 1), (2, 1))


def test_domino_rejects_non_adjacent():
    with pytest.raises(ValueError):
        Domino.of((1, 1), (2, 2))
    with pytest.raises(ValueError):
        Domino.of((1, 1), (1, 1))
    with pytest.raises(ValueError):
        Domino.of((1, 1), (3, 1))


def test_tiling_must_cover_board():
    board = rectangle(2, 1)
    good = Tiling(board, [Domino.of((1, 1), (2, 1))])
    assert horizontal_count(good) == 1
    with pytest.raises(ValueError):
        Tiling(board, [])
    with pytest.raises(ValueError):
        Tiling(rectangle(2, 2), [Domino.of((1, 1), (2, 1))] * 2)


def test_enumerate_small_boards():
    assert len(enumerate_tilings(Board())) == 1
    assert len(enumerate_tilings(rectangle(1, 1))) == 0
    assert len(enumerate_tilings(rectangle(2, 2))) == 2
    assert len(enumerate_tilings(rectangle(4, 4))) == 36
    for w, count in enumerate(FIB):
        assert len(enumerate_tilings(rectangle(w, 2))) == count


def test_enumeration_limit(monkeypatch):
    with pytest.raises(SizeLimitError):
        enumerate_tilings(rectangle(8, 8))
    # an explicit limit overrides the default of 36 cells
    assert len(enumerate_tilings(rectangle(2, 20), limit=40)) == 10946
    monkeypatch.setenv("RESIDUE_TILINGS_LIMIT", "3")
    with pytest.raises(SizeLimitError):
        enumerate_tilings(rectangle(2, 2))


def test_count_matches_enumeration():
    for w in range(0, 7):
        for h in range(0, 5):
            board = rectangle(w, h)
            assert count_tilings(board) == len(enumerate_tilings(board))


def test_signed_sum_known_values():
    # 2x4: one all-vertical tiling (h=0), one all-horizontal (h=4), and
    # three mixed with h=2, so the sum is 1 + 3i^2 + i^4 = -1
    assert signed_sum(rectangle(2, 4)) == -1
    assert signed_sum(rectangle(2, 2)) == 0
    assert signed_sum(rectangle(3, 2)) == -1
    assert signed_sum(rectangle(0, 4)) == 1
    assert signed_sum(rectangle(3, 3)) == 0
    assert signed_sum(rectangle(4, 2)) == -1


def test_signed_sum_matches_bruteforce():
    for w in range(0, 6):
        for h in range(0, 6):
            board = rectangle(w, h)
            assert signed_sum(board) == signed_sum_bruteforce(board)


def test_signed_sum_irregular_board():
    board = rectangle(4, 3) - Board([(1, 3), (4, 1)])
    assert signed_sum(board) == signed_sum_bruteforce(board)


def test_profile_limit():
    with pytest.raises(SizeLimitError):
        signed_sum(rectangle(30, 30))
    # but a long thin board is fine: 2xN tilings all have even h
    assert count_tilings(rectangle(40, 2)) == 165580141


def test_totally_vertical():
    t = totally_vertical_tiling(3, 4)
    assert is_totally_vertical(t)
    assert horizontal_count(t) == 0
    assert len(t.dominoes) == 6
    with pytest.raises(ValueError):
        totally_vertical_tiling(3, 3)


def test_flip_at():
    t = totally_vertical_tiling(2, 2)
    flipped = flip_at(t, (1, 1))
    assert horizontal_count(flipped) == 2
    assert flip_at(flipped, (1, 1)) == t
    with pytest.raises(ValueError):
        flip_at(t, (1, 2))  # the 2x2 square there leaves the board


def test_flip_changes_h_by_two():
    for t in enumerate_tilings(rectangle(4, 4)):
        for u in flip_moves(t):
            assert abs(horizontal_count(u) - horizontal_count(t)) == 2


def test_normalize_to_vertical_staircase():
    for m, n in [(2, 2), (4, 2), (4, 4), (3, 4)]:
        for t in enumerate_tilings(rectangle(m, n)):
            path = normalize_to_vertical(t, m, n)
            assert path[0] == t
            assert is_totally_vertical(path[-1])
            for a, b in zip(path, path[1:]):
                assert b in flip_moves(a)


def test_normalize_bfs_not_longer():
    for t in enumerate_tilings(rectangle(4, 4)):
        stair = normalize_to_vertical(t, 4, 4)
        bfs = normalize_to_vertical(t, 4, 4, method="bfs")
        assert len(bfs) <= len(stair)


def test_normalize_rejects_odd_height():
    t = next(iter(enumerate_tilings(rectangle(4, 3))))
    with pytest.raises(ValueError):
        normalize_to_vertical(t, 4, 3)


def test_transpose_tiling():
    for t in enumerate_tilings(rectangle(3, 4)):
        u = transpose_tiling(t)
        assert len(u.dominoes) == len(t.dominoes)
        assert horizontal_count(u) == len(t.dominoes) - horizontal_count(t)


def test_tiling_json():
    t = totally_vertical_tiling(2, 2)
    obj = t.to_json_obj()
    assert [d["orientation"] for d in obj] == ["v", "v"]
    assert obj[0]["cells"] == [[1, 1], [1, 2]]
