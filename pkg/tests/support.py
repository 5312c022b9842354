"""Shared test helpers: independent reference computations and generators.

The polynomial arithmetic and determinants here are deliberately naive and
separate from the library code paths they check.
"""

from __future__ import annotations

import itertools
import random

from ccarb.graph import ColoredDigraph, ColoredMultigraph, Edge
from ccarb.laplacian import SymbolicMatrix, build_laplacian, minor
from ccarb.polynomials import ModPoly

# ---------------------------------------------------------------- dict polys

DictPoly = dict  # exponent tuple -> signed int coefficient


def poly_add(a: DictPoly, b: DictPoly) -> DictPoly:
    out = dict(a)
    for exps, coeff in b.items():
        out[exps] = out.get(exps, 0) + coeff
    return {k: v for k, v in out.items() if v}


def poly_mul(a: DictPoly, b: DictPoly) -> DictPoly:
    out: DictPoly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def poly_eval(a: DictPoly, point) -> int:
    total = 0
    for exps, coeff in a.items():
        term = coeff
        for base, exp in zip(point, exps):
            term *= base**exp
        total += term
    return total


def entry_poly(entry, nvars: int) -> DictPoly:
    """SymbolicMatrix coefficient vector -> dict polynomial."""
    poly: DictPoly = {}
    if entry[0]:
        poly[(0,) * nvars] = entry[0]
    for var, coeff in enumerate(entry[1:]):
        if coeff:
            exps = tuple(1 if j == var else 0 for j in range(nvars))
            poly[exps] = poly.get(exps, 0) + coeff
    return poly


def cofactor_det(matrix: SymbolicMatrix) -> DictPoly:
    """Symbolic determinant by expansion along the first row."""
    rows = [[entry_poly(e, matrix.nvars) for e in row] for row in matrix.rows]
    return _cofactor(rows, matrix.nvars)


def _cofactor(rows, nvars: int) -> DictPoly:
    size = len(rows)
    if size == 0:
        return {(0,) * nvars: 1}
    if size == 1:
        return dict(rows[0][0])
    total: DictPoly = {}
    sign = 1
    for j in range(size):
        if rows[0][j]:
            sub = [[rows[i][k] for k in range(size) if k != j] for i in range(1, size)]
            for exps, coeff in poly_mul(rows[0][j], _cofactor(sub, nvars)).items():
                total[exps] = total.get(exps, 0) + sign * coeff
        sign = -sign
    return {k: v for k, v in total.items() if v}


def dict_poly_mod(poly: DictPoly, p: int) -> ModPoly:
    return ModPoly(p, dict(poly))


def bareiss_det(matrix) -> int:
    """Exact integer determinant, fraction-free elimination."""
    size = len(matrix)
    if size == 0:
        return 1
    rows = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if rows[r][k]), -1)
            if swap < 0:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[-1][-1]


def classical_in_laplacian_minor(graph: ColoredDigraph, root: int):
    """Uncolored in-degree Laplacian with row/column `root` removed."""
    size = graph.n
    mat = [[0] * size for _ in range(size)]
    for e in graph.edges:
        if e.tail != e.head:
            mat[e.head - 1][e.tail - 1] -= 1
        mat[e.head - 1][e.head - 1] += 1
    keep = [i for i in range(size) if i != root - 1]
    return [[mat[i][j] for j in keep] for i in keep]


# ------------------------------------------------------------- random inputs


def random_digraph(
    rng: random.Random,
    n: int,
    q: int,
    *,
    density: float = 0.3,
    double_chance: float = 0.2,
    weighted: bool = False,
    max_weight: int = 4,
    allow_loops: bool = False,
) -> ColoredDigraph:
    labels = tuple(f"v{i}" for i in range(1, n + 1))
    edges: list[Edge] = []
    for tail in range(1, n + 1):
        for head in range(1, n + 1):
            if tail == head and not allow_loops:
                continue
            for color in range(1, q + 1):
                if rng.random() >= density:
                    continue
                multiplicity = 2 if (not weighted and rng.random() < double_chance) else 1
                for _ in range(multiplicity):
                    weight = rng.randint(1, max_weight) if weighted else None
                    edges.append(Edge(len(edges), tail, head, color, weight))
    return ColoredDigraph(n, q, tuple(edges), labels)


def random_multigraph(
    rng: random.Random, n: int, q: int, *, density: float = 0.4, double_chance: float = 0.15
) -> ColoredMultigraph:
    labels = tuple(f"v{i}" for i in range(1, n + 1))
    edges: list[Edge] = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for color in range(1, q + 1):
                if rng.random() >= density:
                    continue
                multiplicity = 2 if rng.random() < double_chance else 1
                for _ in range(multiplicity):
                    edges.append(Edge(len(edges), a, b, color))
    return ColoredMultigraph(n, q, tuple(edges), labels)


def random_symbolic_matrix(
    rng: random.Random, dim: int, nvars: int, low: int = -3, high: int = 3
) -> SymbolicMatrix:
    rows = tuple(
        tuple(tuple(rng.randint(low, high) for _ in range(nvars + 1)) for _ in range(dim))
        for _ in range(dim)
    )
    return SymbolicMatrix(nvars, rows)


def random_laplacian_style_matrix(rng: random.Random, dim: int, nvars: int) -> SymbolicMatrix:
    """Laplacian minor plus nonnegative diagonal slack.

    Such matrices always have determinants with nonnegative coefficients
    (sums of forest counts), which the exact CRT path requires.
    """
    graph = random_digraph(rng, dim + 1, nvars + 1, density=rng.uniform(0.2, 0.5))
    root = rng.randint(1, dim + 1)
    base = minor(build_laplacian(graph, "in"), root)
    rows = [list(list(entry) for entry in row) for row in base.rows]
    for i in range(dim):
        rows[i][i][0] += rng.randint(0, 2)
    return SymbolicMatrix(nvars, tuple(tuple(tuple(e) for e in row) for row in rows))


# -------------------------------------------------------------- undirected


def spanning_tree_histogram(graph: ColoredMultigraph) -> dict[tuple[int, ...], int]:
    """Brute-force spanning-tree counts per color constraint."""
    hist: dict[tuple[int, ...], int] = {}
    for subset in itertools.combinations(graph.edges, graph.n - 1):
        parent = list(range(graph.n + 1))

        def root_of(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for e in subset:
            ra, rb = root_of(e.tail), root_of(e.head)
            if ra == rb:
                acyclic = False
                break
            parent[ra] = rb
        if not acyclic:
            continue
        counts = [0] * graph.q
        for e in subset:
            counts[e.color - 1] += 1
        alpha = tuple(counts[: graph.q - 1])
        hist[alpha] = hist.get(alpha, 0) + 1
    return hist


def graph_file(graph: ColoredDigraph | ColoredMultigraph) -> str:
    """Serialize a fully labeled graph back into the file format."""
    lines = [f"{graph.n} {graph.q}"]
    if isinstance(graph, ColoredMultigraph):
        lines.append("undirected")
    for e in graph.edges:
        parts = [graph.vertex_label(e.tail), graph.vertex_label(e.head), str(e.color)]
        if e.weight is not None:
            parts.append(str(e.weight))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
