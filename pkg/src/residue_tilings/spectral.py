"""Floating-point product formulas: eigenvalue norms and cosine products.

Everything here is approximate by nature; results are bridged back to the
exact integer quantities via round_signed at an explicit tolerance.
"""

from __future__ import annotations

import cmath
import math

RENORM_GUARD = 1e12


class ToleranceError(ValueError):
    """A floating value failed to round to an integer within tolerance."""

    def __init__(self, message: str, real_residual: float, imag_residual: float):
        super().__init__(message)
        self.real_residual = real_residual
        self.imag_residual = imag_residual


def _root(order: int, k: int) -> complex:
    # One cos/sin evaluation per exponent; no iterated multiplication drift.
    return cmath.exp(2j * math.pi * k / order)


def norm_product(m: int, n: int) -> complex:
    """Product over i in 1..m-1 and j in 1..(n-1)/2 of
    z_2m^i + z_2m^-i + z_n^j + z_n^-j, where z_N is exp(2 pi i / N).

    Equals the determinant of the folded adjacency matrix up to floating
    error; the product is 0 exactly when gcd(m, n) > 1.
    """
    _check_pair(m, n)
    acc = complex(1.0)
    shift = 0
    for i in range(1, m):
        for j in range(1, (n - 1) // 2 + 1):
            acc *= _root(2 * m, i) + _root(2 * m, -i) + _root(n, j) + _root(n, -j)
            if abs(acc) > RENORM_GUARD:
                acc /= 2.0**64
                shift += 64
    return acc * 2.0**shift


def ktf_count(m: int, n: int) -> float:
    """Closed-form tiling count of the (m-1) x (n-1) rectangle for odd m, n:
    4^((m-1)/2 * (n-1)/2) times the product of
    cos^2(2 pi j / m) + cos^2(2 pi k / n)."""
    _check_pair(m, n)
    if m % 2 == 0:
        raise ValueError("m must be odd")
    prod = 1.0
    for j in range(1, (m - 1) // 2 + 1):
        for k in range(1, (n - 1) // 2 + 1):
            prod *= math.cos(2 * math.pi * j / m) ** 2 + math.cos(2 * math.pi * k / n) ** 2
    return 4.0 ** (((m - 1) // 2) * ((n - 1) // 2)) * prod


def eisenstein_product(p: int, q: int) -> float:
    """4^((p-1)/2 * (q-1)/2) times the product of
    cos^2(2 pi j / p) - cos^2(2 pi k / q) over the half ranges.

    For distinct odd primes this is exactly the Jacobi symbol (q / p);
    the floating product rounds to it.
    """
    if not _is_odd_prime(p) or not _is_odd_prime(q) or p == q:
        raise ValueError("p and q must be distinct odd primes")
    prod = 1.0
    for j in range(1, (p - 1) // 2 + 1):
        for k in range(1, (q - 1) // 2 + 1):
            prod *= math.cos(2 * math.pi * j / p) ** 2 - math.cos(2 * math.pi * k / q) ** 2
    return 4.0 ** (((p - 1) // 2) * ((q - 1) // 2)) * prod


def round_signed(value: complex, tol: float = 1e-6) -> int:
    """Round a floating value to the nearest integer, requiring both the
    imaginary part and the rounding residual to be within tol."""
    z = complex(value)
    nearest = round(z.real)
    real_residual = abs(z.real - nearest)
    imag_residual = abs(z.imag)
    if real_residual > tol or imag_residual > tol:
        raise ToleranceError(
            f"value {z!r} does not round to an integer within {tol:g} "
            f"(real residual {real_residual:.3e}, imag residual {imag_residual:.3e})",
            real_residual,
            imag_residual,
        )
    return int(nearest)


def _check_pair(m: int, n: int) -> None:
    if not isinstance(m, int) or not isinstance(n, int):
        raise ValueError("m and n must be ints")
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if n % 2 == 0:
        raise ValueError("n must be odd")


def _is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))
