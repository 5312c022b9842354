"""Sparse multivariate polynomials over Z_p and Z.

Exponent vectors are plain tuples of nonnegative ints, one entry per
variable.  The module provides exactly what the determinant engine needs:
evaluation, dense-grid Lagrange interpolation (variable by variable), and
Chinese-Remainder reconstruction of integer coefficients from residues.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence


@dataclass
class ModPoly:
    """Polynomial with coefficients in Z_p.

    `terms` maps exponent tuples to residues; zero coefficients are never
    stored and everything is reduced into [0, p).
    """

    modulus: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        cleaned: dict[tuple[int, ...], int] = {}
        for exps, coeff in self.terms.items():
            residue = coeff % self.modulus
            if residue:
                cleaned[tuple(exps)] = residue
        self.terms = cleaned

    def evaluate(self, point: Sequence[int]) -> int:
        """Value of the polynomial at `point`, reduced mod p."""
        p = self.modulus
        total = 0
        for exps, coeff in self.terms.items():
            if len(exps) != len(point):
                raise ValueError("point length does not match variable count")
            term = coeff
            for base, exp in zip(point, exps):
                if exp:
                    term = term * pow(base, exp, p) % p
            total = (total + term) % p
        return total


@dataclass
class IntPoly:
    """Polynomial with arbitrary-precision nonnegative integer coefficients."""

    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: dict[tuple[int, ...], int] = {}
        for exps, coeff in self.terms.items():
            if coeff < 0:
                raise ValueError("coefficients must be nonnegative")
            if coeff:
                cleaned[tuple(exps)] = coeff
        self.terms = cleaned

    def coeff(self, alpha: Sequence[int]) -> int:
        """Coefficient of the monomial with exponent vector `alpha` (0 if absent)."""
        return self.terms.get(tuple(alpha), 0)


@dataclass(frozen=True)
class EvalGrid:
    """Evaluation points per variable; axis c holds the residues for x_{c+1}."""

    points: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(axis) for axis in self.points)


def _lagrange_matrix(points: Sequence[int], p: int) -> list[list[int]]:
    # Rows are coefficient slots: coeffs[k] = sum_i matrix[k][i] * values[i] mod p.
    size = len(points)
    residues = [t % p for t in points]
    if len(set(residues)) != size:
        raise ValueError("grid points must be pairwise distinct mod p")
    full = [1]
    for t in residues:
        nxt = [0] * (len(full) + 1)
        for i, c in enumerate(full):
            nxt[i] = (nxt[i] - c * t) % p
            nxt[i + 1] = (nxt[i + 1] + c) % p
        full = nxt
    matrix = [[0] * size for _ in range(size)]
    for i, t_i in enumerate(residues):
        quotient = [0] * size
        quotient[size - 1] = full[size]
        for k in range(size - 1, 0, -1):
            quotient[k - 1] = (full[k] + t_i * quotient[k]) % p
        denom = 1
        for j, t_j in enumerate(residues):
            if j != i:
                denom = denom * (t_i - t_j) % p
        scale = pow(denom, -1, p)
        for k in range(size):
            matrix[k][i] = quotient[k] * scale % p
    return matrix


def interpolate(values: dict[tuple[int, ...], int], grid: EvalGrid, p: int) -> ModPoly:
    """Recover the unique polynomial matching `values` on the grid.

    `values` maps grid index tuples (position along each axis, not the point
    values themselves) to residues.  One-dimensional Lagrange interpolation
    is applied along each axis in turn; the result has per-variable degree
    below the axis length.
    """
    shape = grid.shape
    if len(values) != math.prod(shape):
        raise ValueError("grid shape mismatch")
    for key in values:
        if len(key) != len(shape) or any(not 0 <= k < d for k, d in zip(key, shape)):
            raise ValueError("grid shape mismatch")
    tensor = {key: value % p for key, value in values.items()}
    for axis, axis_points in enumerate(grid.points):
        matrix = _lagrange_matrix(axis_points, p)
        size = len(axis_points)
        other_ranges = [range(d) for j, d in enumerate(shape) if j != axis]
        transformed: dict[tuple[int, ...], int] = {}
        for rest in itertools.product(*other_ranges):
            fiber = [tensor[rest[:axis] + (i,) + rest[axis:]] for i in range(size)]
            for k in range(size):
                coeff = sum(matrix[k][i] * fiber[i] for i in range(size)) % p
                transformed[rest[:axis] + (k,) + rest[axis:]] = coeff
        tensor = transformed
    return ModPoly(p, tensor)


def crt_combine(residue_polys: Sequence[ModPoly]) -> IntPoly:
    """Reconstruct integer coefficients from residues modulo distinct primes.

    Each monomial's coefficient is the unique integer in [0, prod p_i)
    matching all residues; a monomial missing from an input counts as
    residue 0 there.
    """
    polys = list(residue_polys)
    if not polys:
        raise ValueError("at least one residue polynomial is required")
    moduli = [poly.modulus for poly in polys]
    if len(set(moduli)) != len(moduli):
        raise ValueError("duplicate moduli")
    product = math.prod(moduli)
    weights = []
    for p in moduli:
        rest = product // p
        weights.append(rest * pow(rest, -1, p))
    monomials = sorted({mono for poly in polys for mono in poly.terms})
    terms: dict[tuple[int, ...], int] = {}
    for mono in monomials:
        combined = sum(w * poly.terms.get(mono, 0) for w, poly in zip(weights, polys)) % product
        if combined:
            terms[mono] = combined
    return IntPoly(terms)


def render_poly(poly: IntPoly) -> str:
    """Canonical text form: lexicographic monomial order, x_c^0 factors omitted."""
    if not poly.terms:
        return "0"
    parts = []
    for exps in sorted(poly.terms):
        factors = [str(poly.terms[exps])]
        factors.extend(f"x{i}^{e}" for i, e in enumerate(exps, start=1) if e)
        parts.append(" * ".join(factors))
    return " + ".join(parts)
