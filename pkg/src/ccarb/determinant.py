"""Exact determinants of symbolic matrices.

The determinant polynomial is computed by evaluating the matrix on a dense
grid over a prime field, taking scalar determinants, interpolating the grid
values back into a polynomial, and repeating over enough primes for a
Chinese-Remainder reconstruction of the exact integer coefficients.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .laplacian import SymbolicMatrix
from .polynomials import EvalGrid, IntPoly, ModPoly, crt_combine, interpolate

# Primes must fit in half a 64-bit word so products reduce before overflow
# would matter on fixed-width platforms.
PRIME_LIMIT = 1 << 31

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class PrimeSelectionError(ValueError):
    """No admissible prime basis: range exhausted or budget exceeded."""


@dataclass(frozen=True)
class PrimeBasis:
    """Distinct primes above a lower bound whose product beats a coefficient bound."""

    primes: tuple[int, ...]
    product: int


def _is_prime(value: int) -> bool:
    if value < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if value % small == 0:
            return value == small
    d = value - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, value)
        if x in (1, value - 1):
            continue
        for _ in range(s - 1):
            x = x * x % value
            if x == value - 1:
                break
        else:
            return False
    return True


def next_prime(value: int) -> int:
    """Smallest prime strictly greater than `value`."""
    candidate = value + 1
    while not _is_prime(candidate):
        candidate += 1
    return candidate


def select_primes(lower_bound: int, coeff_bound: int, max_count: int | None = None) -> PrimeBasis:
    """Smallest consecutive primes > lower_bound whose product exceeds coeff_bound.

    Always returns at least one prime.  Raises PrimeSelectionError when the
    bound cannot be beaten below PRIME_LIMIT, or when more than `max_count`
    primes would be needed (the message reports the required count).
    """
    if lower_bound < 2:
        raise ValueError("prime lower bound must be at least 2")
    primes: list[int] = []
    product = 1
    candidate = lower_bound
    while product <= coeff_bound or not primes:
        candidate = next_prime(candidate)
        if candidate >= PRIME_LIMIT:
            raise PrimeSelectionError(
                f"cannot exceed coefficient bound with primes below {PRIME_LIMIT}"
            )
        primes.append(candidate)
        product *= candidate
    if max_count is not None and len(primes) > max_count:
        raise PrimeSelectionError(
            f"coefficient bound needs {len(primes)} primes, budget is {max_count}"
        )
    return PrimeBasis(tuple(primes), product)


def det_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Determinant over Z_p by Gaussian elimination with partial pivoting.

    The 0x0 matrix has determinant 1 (empty product).
    """
    size = len(matrix)
    if size == 0:
        return 1
    rows = [[value % p for value in row] for row in matrix]
    if any(len(row) != size for row in rows):
        raise ValueError("matrix must be square")
    det = 1
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), -1)
        if pivot < 0:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = p - det
        pivot_value = rows[col][col]
        det = det * pivot_value % p
        inverse = pow(pivot_value, -1, p)
        for r in range(col + 1, size):
            factor = rows[r][col]
            if factor:
                scale = factor * inverse % p
                upper = rows[col]
                lower = rows[r]
                for c in range(col, size):
                    lower[c] = (lower[c] - scale * upper[c]) % p
    return det % p


def det_poly_mod_p(matrix: SymbolicMatrix, p: int, points_per_var: int | None = None) -> ModPoly:
    """Determinant of a symbolic matrix reduced mod p, by evaluate-interpolate.

    Each of the dim rows contributes degree at most one per variable, so
    dim+1 evaluation points per variable suffice (the default).  Requires
    p > points_per_var.
    """
    size = points_per_var if points_per_var is not None else matrix.dim + 1
    if p <= size:
        raise ValueError(f"prime {p} must exceed the {size} evaluation points per variable")
    axis = tuple(range(size))
    grid = EvalGrid(tuple(axis for _ in range(matrix.nvars)))
    values: dict[tuple[int, ...], int] = {}
    for point in itertools.product(axis, repeat=matrix.nvars):
        values[point] = det_mod_p(matrix.evaluate(point, p), p)
    return interpolate(values, grid, p)


def det_poly(
    matrix: SymbolicMatrix,
    coeff_bound: int,
    *,
    min_prime: int,
    workers: int = 1,
    max_primes: int | None = None,
) -> IntPoly:
    """Exact integer determinant polynomial of a symbolic matrix.

    Valid when the true determinant has nonnegative coefficients bounded by
    `coeff_bound`.  Primes are the smallest ones above `min_prime` (raised
    internally so each prime exceeds the evaluation-point count) whose
    product beats the bound; per-prime determinants are independent, so they
    may run on `workers` threads, and results are combined in a fixed order
    to keep output deterministic.
    """
    points = matrix.dim + 1
    basis = select_primes(max(min_prime, points), coeff_bound, max_count=max_primes)
    if workers > 1 and len(basis.primes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            residues = list(pool.map(lambda p: det_poly_mod_p(matrix, p), basis.primes))
    else:
        residues = [det_poly_mod_p(matrix, p) for p in basis.primes]
    return crt_combine(residues)
