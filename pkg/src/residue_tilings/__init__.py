"""Exact signed domino-tiling sums and the number theory they encode."""

from .board import (
    Board,
    Cell,
    LShapeSpec,
    half_board,
    l_board,
    rectangle,
    rotate180_within,
    transpose,
)
from .gaussian import GaussianInt, i_power
from .tiling import (
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
from .kasteleyn import SignedMatrix, build_kasteleyn, det_exact, signed_sum_via_det
from .residue import (
    gauss_sign,
    gauss_sign_even_half,
    half_residue,
    jacobi,
    theorem_rhs,
)
from .spectral import (
    ToleranceError,
    eisenstein_product,
    ktf_count,
    norm_product,
    round_signed,
)
from .decomp import (
    ClosureReport,
    DecompositionReport,
    admissible_diagonal,
    closure,
    closure_report,
    closure_union,
    half_board_parity,
    half_board_sum,
    half_board_support,
    l_signed_sum_closed,
    periodicity_factor,
    reciprocity_free_sum,
    restricted_sum,
    verify_decomposition,
)

__version__ = "0.1.0"
