"""Domino tilings, signed sums, and flip moves.

The signed sum of a board X is sum over tilings D of i**h(D), where h(D)
counts horizontal dominoes.  Two independent evaluation routes live here:
a backtracking enumerator (the oracle, limited to small boards) and a
broken-profile dynamic program over Gaussian-integer weights that handles
every board size used elsewhere in the package.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .board import Board, Cell, rectangle
from .gaussian import GaussianInt, ZERO, i_power

DEFAULT_CELL_LIMIT = 36
ENV_CELL_LIMIT = "RESIDUE_TILINGS_LIMIT"
MAX_PROFILE = 24


class SizeLimitError(RuntimeError):
    """A board exceeded an enumeration or profile-width resource limit."""


@dataclass(frozen=True, order=True)
class Domino:
    """Two adjacent cells; ``a`` is the lexicographically smaller one."""

    a: Cell
    b: Cell

    def __post_init__(self) -> None:
        (ai, aj), (bi, bj) = self.a, self.b
        if (bi - ai, bj - aj) not in ((1, 0), (0, 1)):
            raise ValueError(f"cells {self.a} and {self.b} do not form a domino")

    @classmethod
    def of(cls, c1: Cell, c2: Cell) -> "Domino":
        return cls(min(c1, c2), max(c1, c2))

    @property
    def horizontal(self) -> bool:
        return self.a[1] == self.b[1]

    @property
    def cells(self) -> tuple[Cell, Cell]:
        return (self.a, self.b)

    def to_json_obj(self) -> dict:
        return {
            "cells": [list(self.a), list(self.b)],
            "orientation": "h" if self.horizontal else "v",
        }


class Tiling:
    """A perfect cover of a board by dominoes, stored in canonical order."""

    __slots__ = ("_board", "_dominoes")

    def __init__(self, board: Board, dominoes: Iterable[Domino]):
        doms = tuple(sorted(dominoes))
        covered: set[Cell] = set()
        for d in doms:
            for cell in d.cells:
                if cell not in board:
                    raise ValueError(f"domino cell {cell} not on the board")
                if cell in covered:
                    raise ValueError(f"cell {cell} covered twice")
                covered.add(cell)
        if len(covered) != len(board):
            raise ValueError("dominoes do not cover the whole board")
        self._board = board
        self._dominoes = doms

    @property
    def board(self) -> Board:
        return self._board

    @property
    def dominoes(self) -> tuple[Domino, ...]:
        return self._dominoes

    def cover_map(self) -> dict[Cell, Domino]:
        return {cell: d for d in self._dominoes for cell in d.cells}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self._dominoes == other._dominoes and self._board == other._board

    def __hash__(self) -> int:
        return hash(self._dominoes)

    def __repr__(self) -> str:
        return f"Tiling({len(self._dominoes)} dominoes)"

    def to_json_obj(self) -> list[dict]:
        return [d.to_json_obj() for d in self._dominoes]


def horizontal_count(tiling: Tiling) -> int:
    return sum(1 for d in tiling.dominoes if d.horizontal)


def _cell_limit(limit: int | None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get(ENV_CELL_LIMIT)
    if env:
        return int(env)
    return DEFAULT_CELL_LIMIT


def enumerate_tilings(board: Board, limit: int | None = None) -> list[Tiling]:
    """All tilings of board, in deterministic backtracking order.

    At each step the lexicographically smallest uncovered cell is matched
    with its right neighbor first, then its upper neighbor.  Boards larger
    than the cell limit (default 36, overridable via the
    RESIDUE_TILINGS_LIMIT environment variable) are refused.
    """
    bound = _cell_limit(limit)
    if len(board) > bound:
        raise SizeLimitError(
            f"board has {len(board)} cells, enumeration limit is {bound}"
        )
    order = board.cells
    size = len(order)
    position = {cell: k for k, cell in enumerate(order)}
    # Right and upper neighbors by cell index; both are lex-greater, so the
    # smallest uncovered cell only ever pairs forward.
    partners = [
        tuple(
            position[p]
            for p in ((i + 1, j), (i, j + 1))
            if p in position
        )
        for i, j in order
    ]
    covered = bytearray(size)
    chosen: list[tuple[int, int]] = []
    results: list[Tiling] = []

    def backtrack(idx: int) -> None:
        while idx < size and covered[idx]:
            idx += 1
        if idx == size:
            results.append(
                Tiling(board, (Domino(order[a], order[b]) for a, b in chosen))
            )
            return
        for p in partners[idx]:
            if not covered[p]:
                covered[idx] = covered[p] = 1
                chosen.append((idx, p))
                backtrack(idx + 1)
                chosen.pop()
                covered[idx] = covered[p] = 0

    backtrack(0)
    return results


def signed_sum_bruteforce(board: Board, limit: int | None = None) -> GaussianInt:
    """Oracle: sum i**h(D) by explicit enumeration."""
    total = ZERO
    for t in enumerate_tilings(board, limit):
        total = total + i_power(horizontal_count(t))
    return total


def signed_sum(board: Board, max_profile: int = MAX_PROFILE) -> GaussianInt:
    """Sum of i**h(D) over all tilings D of board, computed exactly.

    Broken-profile DP, swept column by column over the bounding box.  When
    the bounding box is taller than wide the board is transposed first and
    the i-weight moves to vertical placements, so h still counts dominoes
    that are horizontal in the original orientation.
    """
    # Weights live in Z[i]; each horizontal domino multiplies by i, which
    # on an (re, im) pair is the rotation (re, im) -> (-im, re).
    re, im = _profile_sum(board, True, max_profile)
    return GaussianInt(re, im)


def count_tilings(board: Board, max_profile: int = MAX_PROFILE) -> int:
    """Number of tilings of board (same sweep as signed_sum, weight 1)."""
    return _profile_sum(board, False, max_profile)


def _profile_sum(board, signed, max_profile):
    if signed:
        zero, one = (0, 0), (1, 0)
    else:
        zero, one = 0, 1
    cells = board.cells
    if not cells:
        return one
    if len(cells) % 2:
        return zero
    min_i, min_j, max_i, max_j = board.bounds()
    width, height = max_i - min_i + 1, max_j - min_j + 1
    weight_on_horizontal = True
    if height > width:
        cells = [(j, i) for i, j in cells]
        min_i, min_j = min_j, min_i
        width, height = height, width
        weight_on_horizontal = False
    if height > max_profile:
        raise SizeLimitError(
            f"profile dimension {height} exceeds limit {max_profile}"
        )

    col_masks = [0] * width
    for i, j in cells:
        col_masks[i - min_i] |= 1 << (j - min_j)
    full = (1 << height) - 1

    states = {0: one}
    for x in range(width):
        col = col_masks[x]
        nxt_col = col_masks[x + 1] if x + 1 < width else 0
        new_states: dict = {}

        def fill(y, occupied, out, w):
            while y < height and occupied >> y & 1:
                y += 1
            if y == height:
                prior = new_states.get(out)
                if prior is None:
                    new_states[out] = w
                elif signed:
                    new_states[out] = (prior[0] + w[0], prior[1] + w[1])
                else:
                    new_states[out] = prior + w
                return
            # cell (x, y) is present and uncovered here
            if nxt_col >> y & 1:
                hw = w
                if signed and weight_on_horizontal:
                    hw = (-w[1], w[0])
                fill(y + 1, occupied | 1 << y, out | 1 << y, hw)
            if y + 1 < height and col >> (y + 1) & 1 and not occupied >> (y + 1) & 1:
                vw = w
                if signed and not weight_on_horizontal:
                    vw = (-w[1], w[0])
                fill(y + 2, occupied | 3 << y, out, vw)

        for mask, weight in states.items():
            fill(0, mask | (full & ~col), 0, weight)
        states = new_states
        if not states:
            return zero
    return states.get(0, zero)


def flip_at(tiling: Tiling, corner: Cell) -> Tiling:
    """Rotate the two parallel dominoes covering the 2x2 square whose
    lower-left cell is corner; raises ValueError if the square is not
    covered by exactly two parallel dominoes."""
    x, y = corner
    c00, c10, c01, c11 = (x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)
    board = tiling.board
    for cell in (c00, c10, c01, c11):
        if cell not in board:
            raise ValueError(f"square at {corner} is not inside the board")
    cover = tiling.cover_map()
    d_low = cover[c00]
    if d_low.cells == (c00, c10) and cover[c01].cells == (c01, c11):
        old = (d_low, cover[c01])
        new = (Domino.of(c00, c01), Domino.of(c10, c11))
    elif d_low.cells == (c00, c01) and cover[c10].cells == (c10, c11):
        old = (d_low, cover[c10])
        new = (Domino.of(c00, c10), Domino.of(c01, c11))
    else:
        raise ValueError(f"square at {corner} is not covered by a parallel pair")
    remaining = [d for d in tiling.dominoes if d not in old]
    return Tiling(board, remaining + list(new))


def flip_moves(tiling: Tiling) -> list[Tiling]:
    """All tilings one flip away, ordered by the flipped square's corner."""
    board = tiling.board
    cover = tiling.cover_map()
    moves = []
    for x, y in board.cells:
        square = ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))
        if not all(c in board for c in square):
            continue
        c00, c10, c01, c11 = square
        d_low = cover[c00]
        if (d_low.cells == (c00, c10) and cover[c01].cells == (c01, c11)) or (
            d_low.cells == (c00, c01) and cover[c10].cells == (c10, c11)
        ):
            moves.append(flip_at(tiling, (x, y)))
    return moves


def totally_vertical_tiling(m: int, n: int) -> Tiling:
    """The all-vertical tiling of the m x n rectangle (n must be even)."""
    if n % 2:
        raise ValueError("height must be even")
    board = rectangle(m, n)
    dominoes = [
        Domino.of((i, j), (i, j + 1))
        for i in range(1, m + 1)
        for j in range(1, n + 1, 2)
    ]
    return Tiling(board, dominoes)


def is_totally_vertical(tiling: Tiling) -> bool:
    return all(not d.horizontal for d in tiling.dominoes)


def normalize_to_vertical(
    tiling: Tiling, m: int, n: int, method: str = "staircase"
) -> list[Tiling]:
    """A flip path from tiling to the all-vertical tiling of the m x n
    rectangle.  Returns the visited tilings including both endpoints, so an
    already-vertical input yields a single-element path.

    The default method walks a staircase of forced dominoes: for each
    column pair and each odd row, find the smallest index where two
    consecutive staircase dominoes are parallel and flip back down to the
    row's origin, leaving the pair of cells vertically covered.  Flips
    never touch finished rows or columns, so progress is monotone.
    ``method="bfs"`` searches the flip graph instead and is used as an
    independent cross-check.
    """
    if n % 2:
        raise ValueError("height must be even")
    if tiling.board != rectangle(m, n):
        raise ValueError("tiling is not over the given rectangle")
    if method == "bfs":
        return _bfs_path(tiling)
    if method != "staircase":
        raise ValueError(f"unknown method {method!r}")

    path = [tiling]
    current = tiling
    for c in range(1, m, 2):
        for r in range(1, n, 2):
            cover = current.cover_map()
            if cover[(c, r)].horizontal:
                start = (c, r)
            elif cover[(c + 1, r)].horizontal:
                start = (c + 1, r)
            else:
                continue
            current = _staircase(current, start, path)
    if not is_totally_vertical(current):
        raise RuntimeError("normalization did not reach the vertical tiling")
    return path


def _staircase_square(origin: Cell, k: int) -> Cell:
    # Square k of the staircase: ceil(k/2) right, ceil((k+1)/2) up, 1-based.
    return (origin[0] - 1 + (k + 1) // 2, origin[1] - 1 + (k + 2) // 2)


def _staircase(tiling: Tiling, origin: Cell, path: list[Tiling]) -> Tiling:
    """One staircase pass: origin is covered by a horizontal domino; after
    the pass origin and its right neighbor are covered by verticals."""
    cover = tiling.cover_map()
    board = tiling.board
    k = 1
    prev = cover[_staircase_square(origin, 1)]
    while True:
        nxt_cell = _staircase_square(origin, k + 1)
        if nxt_cell not in board or k > 2 * len(board):
            raise RuntimeError("staircase ran off the board")
        nxt = cover[nxt_cell]
        if nxt.horizontal == prev.horizontal:
            break
        prev = nxt
        k += 1
    current = tiling
    for idx in range(k, 0, -1):
        current = flip_at(current, _staircase_square(origin, idx))
        path.append(current)
    return current


def _bfs_path(tiling: Tiling) -> list[Tiling]:
    if is_totally_vertical(tiling):
        return [tiling]
    parents: dict[Tiling, Tiling] = {tiling: tiling}
    frontier = [tiling]
    while frontier:
        nxt_frontier = []
        for t in frontier:
            for move in flip_moves(t):
                if move in parents:
                    continue
                parents[move] = t
                if is_totally_vertical(move):
                    path = [move]
                    while path[-1] is not tiling:
                        path.append(parents[path[-1]])
                    path.reverse()
                    return path
                nxt_frontier.append(move)
        frontier = nxt_frontier
    raise RuntimeError("vertical tiling unreachable by flips")


def transpose_tiling(tiling: Tiling) -> Tiling:
    """The same tiling on the transposed board; swaps orientations."""
    from .board import transpose as transpose_board

    swapped = [Domino.of((d.a[1], d.a[0]), (d.b[1], d.b[0])) for d in tiling.dominoes]
    return Tiling(transpose_board(tiling.board), swapped)
