"""Finite boards of 1-indexed lattice cells.

A cell is a pair (i, j) with i the column and j the row, both starting at 1.
Boards are immutable cell sets with a canonical lexicographic ordering, so
equal boards compare and serialize identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Cell = tuple[int, int]


class Board:
    """An immutable set of cells."""

    __slots__ = ("_cells", "_cellset")

    def __init__(self, cells: Iterable[Cell] = ()):
        seen: set[Cell] = set()
        for cell in cells:
            i, j = cell
            if not isinstance(i, int) or not isinstance(j, int):
                raise ValueError(f"cell coordinates must be ints, got {cell!r}")
            if i < 1 or j < 1:
                raise ValueError(f"cells are 1-indexed, got {cell!r}")
            seen.add((i, j))
        self._cells: tuple[Cell, ...] = tuple(sorted(seen))
        self._cellset: frozenset[Cell] = frozenset(seen)

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self._cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self._cells)

    def __len__(self) -> int:
        return len(self._cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self._cellset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Board):
            return NotImplemented
        return self._cellset == other._cellset

    def __hash__(self) -> int:
        return hash(self._cells)

    def __le__(self, other: "Board") -> bool:
        return self._cellset <= other._cellset

    def __or__(self, other: "Board") -> "Board":
        return Board(self._cells + other._cells)

    def __sub__(self, other: "Board") -> "Board":
        return Board(self._cellset - other._cellset)

    def __and__(self, other: "Board") -> "Board":
        return Board(self._cellset & other._cellset)

    def __repr__(self) -> str:
        return f"Board({list(self._cells)!r})"

    def bounds(self) -> tuple[int, int, int, int]:
        """(min_i, min_j, max_i, max_j); raises on the empty board."""
        if not self._cells:
            raise ValueError("empty board has no bounds")
        return (
            min(i for i, _ in self._cells),
            min(j for _, j in self._cells),
            max(i for i, _ in self._cells),
            max(j for _, j in self._cells),
        )

    def to_json_obj(self) -> list[list[int]]:
        return [[i, j] for i, j in self._cells]

    @classmethod
    def from_json_obj(cls, obj: Iterable[Iterable[int]]) -> "Board":
        return cls((int(i), int(j)) for i, j in obj)


@dataclass(frozen=True)
class LShapeSpec:
    """Arm lengths for a chain of L-shaped chunks.

    Chunk k (0-based) is shifted by (k, k) and consists of a horizontal arm
    of a[k] cells along its bottom row and a vertical arm of b[k] cells along
    its left column, sharing the corner cell.  A chunk with a[k] == 0 or
    b[k] == 0 is empty.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise ValueError("arm length lists must have equal length")
        if any(x < 0 for x in self.a + self.b):
            raise ValueError("arm lengths must be non-negative")


def rectangle(width: int, height: int) -> Board:
    """The full width x height board; width or height 0 gives the empty board."""
    if not isinstance(width, int) or not isinstance(height, int):
        raise ValueError("width and height must be ints")
    if width < 0 or height < 0:
        raise ValueError("width and height must be non-negative")
    return Board((i, j) for i in range(1, width + 1) for j in range(1, height + 1))


def l_board(spec: LShapeSpec) -> Board:
    """The union of shifted L-shaped chunks described by spec."""
    cells: list[Cell] = []
    for k, (a, b) in enumerate(zip(spec.a, spec.b)):
        if a == 0 or b == 0:
            continue
        cells.extend((k + i, k + 1) for i in range(1, a + 1))
        cells.extend((k + 1, k + j) for j in range(1, b + 1))
    return Board(cells)


def half_board(m: int, n: int, diag: Iterable[int] = ()) -> Board:
    """The cells of the (m-1) x (n-1) rectangle strictly below the
    anti-diagonal i + j = (m+n)/2, plus the anti-diagonal cells
    ((m+n)/2 - a, a) for each a in diag.

    Requires m, n odd with m > n; diag must be a subset of 1..n-1.
    """
    _check_half_board_args(m, n)
    marks = frozenset(int(a) for a in diag)
    if not marks <= frozenset(range(1, n)):
        raise ValueError("diag must be a subset of 1..n-1")
    mid = (m + n) // 2
    cells = [
        (i, j) for i in range(1, m) for j in range(1, n) if i + j < mid
    ]
    cells.extend((mid - a, a) for a in marks)
    return Board(cells)


def _check_half_board_args(m: int, n: int) -> None:
    if not isinstance(m, int) or not isinstance(n, int):
        raise ValueError("m and n must be ints")
    if m < 1 or n < 1 or m % 2 == 0 or n % 2 == 0:
        raise ValueError("m and n must be odd positive ints")
    if m <= n:
        raise ValueError("m must exceed n")


def transpose(board: Board) -> Board:
    """Swap columns and rows."""
    return Board((j, i) for i, j in board)


def rotate180_within(m: int, n: int, board: Board) -> Board:
    """Image of board under (i, j) -> (m - i, n - j).

    The map is the half-turn of the (m-1) x (n-1) rectangle about its
    center, so board must lie inside that rectangle.
    """
    for i, j in board:
        if not (1 <= i <= m - 1 and 1 <= j <= n - 1):
            raise ValueError(f"cell {(i, j)} outside the (m-1) x (n-1) rectangle")
    return Board((m - i, n - j) for i, j in board)
