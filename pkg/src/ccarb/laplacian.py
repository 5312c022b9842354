"""Symbolic degree Laplacians of colored multidigraphs and their minors.

Every matrix entry is a polynomial of degree at most one in each of the
q-1 color variables x_1..x_{q-1}; color q contributes to the constant term
(x_q is fixed to 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ColoredDigraph

LinearEntry = tuple[int, ...]


@dataclass(frozen=True)
class SymbolicMatrix:
    """Square matrix of degree-<=1-per-variable polynomials.

    Entry (i, j) is a coefficient vector of length nvars+1: slot 0 is the
    constant term, slot c the coefficient of x_c.
    """

    nvars: int
    rows: tuple[tuple[LinearEntry, ...], ...]

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError("variable count must be nonnegative")
        width = self.nvars + 1
        for row in self.rows:
            if len(row) != len(self.rows):
                raise ValueError("matrix must be square")
            for entry in row:
                if len(entry) != width:
                    raise ValueError(f"entries must have {width} coefficient slots")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def evaluate(self, point: tuple[int, ...], p: int) -> list[list[int]]:
        """Substitute residues for x_1..x_nvars and reduce every entry mod p."""
        if len(point) != self.nvars:
            raise ValueError("point length does not match variable count")
        scalar = []
        for row in self.rows:
            out = []
            for entry in row:
                value = entry[0]
                for coeff, x in zip(entry[1:], point):
                    if coeff:
                        value += coeff * x
                out.append(value % p)
            scalar.append(out)
        return scalar


def build_laplacian(
    graph: ColoredDigraph, orientation: str = "out", weighted: bool = False
) -> SymbolicMatrix:
    """Build the symbolic out-degree or in-degree Laplacian.

    For orientation "out", entry (i, j) with i != j is -sum_c d_ijc x_c and
    the diagonal (i, i) is the full row sum sum_k sum_c d_ikc x_c
    (self-loops count only toward the diagonal).  Orientation "in" swaps the
    roles of tail and head, which equals the out-degree Laplacian of the
    reversed graph.  In weighted mode, edge weights replace multiplicities;
    this requires at most one edge per (tail, head, color).
    """
    if orientation not in ("out", "in"):
        raise ValueError(f"orientation must be 'out' or 'in', got {orientation!r}")
    if weighted:
        if not graph.weighted:
            raise ValueError("weighted Laplacian requires all edges to carry weights")
        if any(count > 1 for count in graph.multiplicity_index.values()):
            raise ValueError("weighted Laplacian requires duplicate same-color parallel edges to be removed")
    nvars = graph.q - 1
    width = nvars + 1
    entries = [[[0] * width for _ in range(graph.n)] for _ in range(graph.n)]
    for e in graph.edges:
        value = e.weight if weighted else 1
        slot = 0 if e.color == graph.q else e.color
        a, b = (e.tail, e.head) if orientation == "out" else (e.head, e.tail)
        if a != b:
            entries[a - 1][b - 1][slot] -= value
        entries[a - 1][a - 1][slot] += value
    rows = tuple(tuple(tuple(entry) for entry in row) for row in entries)
    return SymbolicMatrix(nvars, rows)


def minor(matrix: SymbolicMatrix, index: int) -> SymbolicMatrix:
    """Delete row and column `index` (1-based); remaining order is preserved."""
    if not (1 <= index <= matrix.dim):
        raise ValueError(f"index {index} out of range 1..{matrix.dim}")
    keep = [i for i in range(matrix.dim) if i != index - 1]
    rows = tuple(tuple(matrix.rows[i][j] for j in keep) for i in keep)
    return SymbolicMatrix(matrix.nvars, rows)
