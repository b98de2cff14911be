"""Combinatorial decomposition machinery for signed tiling sums.

This module carries the self-contained route to the main identity: closed
forms for L-shaped chains, closure-based board decompositions, the width
periodicity of rectangle sums, and the half-board analysis that produces
the signed sum without ever evaluating a Jacobi symbol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .board import Board, LShapeSpec, _check_half_board_args, half_board, rectangle
from .gaussian import GaussianInt, ZERO, i_power
from .residue import half_residue
from .tiling import (
    SizeLimitError,
    Tiling,
    enumerate_tilings,
    horizontal_count,
    signed_sum,
)

DEFAULT_FREE_CELL_LIMIT = 16


def l_signed_sum_closed(spec: LShapeSpec) -> GaussianInt:
    """Closed form of the signed sum of an L-chain with |a_k - b_k| <= 1:
    zero if any chunk is a square (a_k == b_k != 0), otherwise the product
    of i**floor(a_k / 2)."""
    for a, b in zip(spec.a, spec.b):
        if abs(a - b) > 1:
            raise ValueError("arm lengths must differ by at most 1 in each chunk")
    if any(a == b != 0 for a, b in zip(spec.a, spec.b)):
        return ZERO
    return i_power(sum(a // 2 for a in spec.a))


def closure(board: Board, tiling: Tiling, subset: Board) -> Board:
    """The smallest superset of subset such that no domino of tiling
    crosses its boundary.  Worklist propagation; each productive step
    absorbs a whole domino, so it stabilizes after at most |t| rounds."""
    if not subset <= board:
        raise ValueError("subset must lie inside the board")
    if tiling.board != board:
        raise ValueError("tiling does not cover the given board")
    region = set(subset.cells)
    changed = True
    while changed:
        changed = False
        for d in tiling.dominoes:
            a, b = d.cells
            if (a in region) != (b in region):
                region.add(a)
                region.add(b)
                changed = True
    return Board(region)


@dataclass(frozen=True, eq=False)
class ClosureReport:
    """Per-tiling closures of one subset and their union."""

    subset: Board
    per_tiling: dict[Tiling, Board] = field(repr=False)
    union: Board = field(default_factory=Board)


def closure_report(board: Board, subset: Board, limit: int | None = None) -> ClosureReport:
    per_tiling = {
        t: closure(board, t, subset) for t in enumerate_tilings(board, limit)
    }
    union: set = set()
    for closed in per_tiling.values():
        union.update(closed.cells)
    return ClosureReport(subset, per_tiling, Board(union))


def closure_union(board: Board, subset: Board, limit: int | None = None) -> Board:
    """Union of the closures of subset over every tiling of board; the
    empty board when board has no tilings."""
    return closure_report(board, subset, limit).union


def restricted_sum(subset: Board, board: Board, limit: int | None = None) -> GaussianInt:
    """Sum of i**h(D) over tilings D of board whose closure of subset is
    the whole board."""
    if not subset <= board:
        raise ValueError("subset must lie inside the board")
    total = ZERO
    for t in enumerate_tilings(board, limit):
        if closure(board, t, subset) == board:
            total = total + i_power(horizontal_count(t))
    return total


@dataclass(frozen=True, eq=False)
class DecompositionReport:
    board: Board
    subset: Board
    closure: Board
    lhs: GaussianInt
    rhs: GaussianInt
    terms: tuple[tuple[Board, GaussianInt, GaussianInt], ...]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_decomposition(
    board: Board,
    subset: Board,
    limit: int | None = None,
    free_cell_limit: int = DEFAULT_FREE_CELL_LIMIT,
) -> DecompositionReport:
    """Check S(X) = sum over T <= U <= Cl(T) of S(X \\ U) * S(T; U), where
    S(T; U) restricts to tilings of U that close T to all of U.

    Both sides are computed exactly.  Each term records (U, S(X \\ U),
    S(T; U)).  The number of intermediate boards is 2**|Cl(T) \\ T|, so
    that gap is capped by free_cell_limit.
    """
    if not subset <= board:
        raise ValueError("subset must lie inside the board")
    lhs = signed_sum(board)
    clo = closure_union(board, subset, limit)
    terms: list[tuple[Board, GaussianInt, GaussianInt]] = []
    rhs = ZERO
    if subset <= clo:
        free = (clo - subset).cells
        if len(free) > free_cell_limit:
            raise SizeLimitError(
                f"{len(free)} free closure cells exceed limit {free_cell_limit}"
            )
        for picks in range(1 << len(free)):
            extra = [free[p] for p in range(len(free)) if picks >> p & 1]
            middle = Board(subset.cells + tuple(extra))
            outside = signed_sum(board - middle)
            closing = restricted_sum(subset, middle, limit)
            terms.append((middle, outside, closing))
            rhs = rhs + outside * closing
    return DecompositionReport(board, subset, clo, lhs, rhs, tuple(terms))


def periodicity_factor(n: int) -> GaussianInt:
    """Multiplier relating rectangle sums of heights n and widths m and
    m + n + 1: i**((n^2 + 2n) / 4) for even n, i**((n^2 + 2n + 1) / 4)
    for odd n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive int")
    if n % 2 == 0:
        exponent = (n * n + 2 * n) // 4
    else:
        exponent = (n * n + 2 * n + 1) // 4
    return i_power(exponent)


def admissible_diagonal(m: int, n: int) -> frozenset[int]:
    """The unique anti-diagonal index set with a nonzero half-board
    contribution: the residues k * (m/2 mod n) for k in 1..(n-1)/2.

    Requires odd coprime m, n with n < m < 3n.
    """
    _check_window(m, n)
    if math.gcd(m, n) != 1:
        raise ValueError("m and n must be coprime")
    step = half_residue(m, n, 2)
    return frozenset(k * step % n for k in range(1, (n - 1) // 2 + 1))


def half_board_support(m: int, n: int, diag: Iterable[int]) -> bool:
    """Whether the index set diag satisfies the three support conditions
    under which the half-board sum is nonzero."""
    _check_window(m, n)
    marks = frozenset(int(a) for a in diag)
    if not marks <= frozenset(range(1, n)):
        raise ValueError("diag must be a subset of 1..n-1")
    # With n < m < 3n the residue m/2 mod n is exactly (m - n)/2.
    t = (m - n) // 2
    if t not in marks:
        return False
    for i in range(1, n):
        j = (t - i) % n
        if i < j < n and len({i, j} & marks) != 1:
            return False
        if (2 * i - t) % n == 0 and i in marks:
            return False
    return True


def half_board_sum(m: int, n: int, diag: Iterable[int]) -> GaussianInt:
    """Exact signed sum of the half board with anti-diagonal cells diag.

    The value is always one of 0, 1, -1, i, -i, and can be nonzero only
    when diag satisfies the support conditions; both facts are asserted.
    """
    _check_window(m, n)
    marks = frozenset(int(a) for a in diag)
    value = signed_sum(half_board(m, n, marks))
    assert value in _HALF_BOARD_VALUES, f"half-board sum {value} out of range"
    if value != ZERO:
        assert half_board_support(m, n, marks), (
            f"nonzero half-board sum at unsupported diag {sorted(marks)}"
        )
    return value


_HALF_BOARD_VALUES = frozenset(
    [ZERO, i_power(0), i_power(1), i_power(2), i_power(3)]
)


def half_board_parity(m: int, n: int, diag: Iterable[int]) -> int:
    """Common parity of h(D) over tilings of the half board:
    (n-1)/4 - #diag/2 + #(odd elements of diag), reduced mod 2.

    Evaluated exactly as a rational; a non-integral value means the half
    board is untilable and raises ValueError.
    """
    _check_half_board_args(m, n)
    marks = frozenset(int(a) for a in diag)
    if not marks <= frozenset(range(1, n)):
        raise ValueError("diag must be a subset of 1..n-1")
    expr = (
        Fraction(n - 1, 4)
        - Fraction(len(marks), 2)
        + sum(1 for a in marks if a % 2)
    )
    if expr.denominator != 1:
        raise ValueError(f"parity expression {expr} is not an integer (untilable)")
    return int(expr) % 2


def reciprocity_free_sum(m: int, n: int) -> int:
    """Signed tiling sum of the (m-1) x (n-1) rectangle computed by the
    combinatorial route alone: width periodicity reduces m into the window
    n < m < 3n with m odd, where the sum is the square of the half-board
    sum at the admissible diagonal.  No Jacobi symbols are evaluated.
    """
    if not isinstance(m, int) or not isinstance(n, int):
        raise ValueError("m and n must be ints")
    if m < 1 or n < 1 or n % 2 == 0:
        raise ValueError("m must be positive and n odd positive")
    if math.gcd(m, n) > 1:
        return 0
    if n == 1:
        return 1
    r = m % n
    base = n + r if (n + r) % 2 else 2 * n + r
    steps = (m - base) // n
    # Each width step of n multiplies the sum by i**((n^2 - 1)/4), which is
    # real because (n^2 - 1)/4 is even for odd n.
    factor = i_power((n * n - 1) // 4 * steps)
    half = half_board_sum(base, n, admissible_diagonal(base, n))
    value = factor * half * half
    assert value.is_real, f"reciprocity-free sum came out non-real: {value}"
    return value.re


def _check_window(m: int, n: int) -> None:
    _check_half_board_args(m, n)
    if not n < m < 3 * n:
        raise ValueError("m must satisfy n < m < 3n")
