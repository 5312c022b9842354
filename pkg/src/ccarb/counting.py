"""Counting, deciding, and finding color-constrained arborescences.

The count of arborescences rooted at s with a prescribed color histogram is
the coefficient of the matching monomial in the determinant of the symbolic
in-degree Laplacian with row and column s deleted.  Spanning trees of an
undirected graph reduce to arborescences of the bidirected graph, and
functional subgraphs whose cycles are all self-loops are counted by the
determinant of the full out-degree Laplacian.
"""

from __future__ import annotations

from dataclasses import dataclass

from .determinant import det_poly
from .graph import ColoredDigraph, ColoredMultigraph, remove_edge, remove_in_arcs
from .laplacian import build_laplacian, minor


@dataclass(frozen=True)
class Arborescence:
    """Spanning out-tree rooted at `root`: the ids of its n-1 edges, ascending."""

    root: int
    edge_ids: tuple[int, ...]


def _checked_alpha(q: int, alpha) -> tuple[int, ...]:
    values = tuple(int(a) for a in alpha)
    if len(values) != q - 1:
        raise ValueError(f"color constraint must have q-1 = {q - 1} entries, got {len(values)}")
    if any(a < 0 for a in values):
        raise ValueError("color constraint entries must be nonnegative")
    return values


def _checked_root(graph: ColoredDigraph, root: int) -> None:
    if not (1 <= root <= graph.n):
        raise ValueError(f"root {root} out of range 1..{graph.n}")


def _require_loopless(graph: ColoredDigraph) -> None:
    if graph.has_self_loops:
        raise ValueError("self-loops are not allowed here")


def count_table(graph: ColoredDigraph, root: int, *, workers: int = 1) -> dict[tuple[int, ...], int]:
    """Counts of root-arborescences for every color constraint at once.

    Returns a map from exponent vectors (edge counts of colors 1..q-1; the
    color-q count is implied by the n-1 total) to positive counts.  Absent
    vectors mean count zero; a graph with no arborescence yields an empty
    table.  The determinant coefficients are bounded by m^n with m the edge
    count including parallel duplicates, and the primes sit above
    max(distinct-edge count, 2n).
    """
    _checked_root(graph, root)
    _require_loopless(graph)
    trimmed = remove_in_arcs(graph, root)
    reduced = minor(build_laplacian(trimmed, "in"), root)
    bound = max(len(trimmed.edges), 1) ** graph.n
    floor = max(len(trimmed.multiplicity_index), 2 * graph.n)
    determinant = det_poly(reduced, bound, min_prime=floor, workers=workers)
    return dict(determinant.terms)


def count(graph: ColoredDigraph, root: int, alpha, *, workers: int = 1) -> int:
    """Number of root-arborescences with exactly alpha_c edges of color c."""
    constraint = _checked_alpha(graph.q, alpha)
    return count_table(graph, root, workers=workers).get(constraint, 0)


def decide(graph: ColoredDigraph, root: int, alpha, *, workers: int = 1) -> bool:
    """Whether at least one arborescence satisfies the color constraint."""
    return count(graph, root, alpha, workers=workers) > 0


def _drop_duplicate_colors(graph: ColoredDigraph) -> ColoredDigraph:
    # Parallel same-color edges are interchangeable for existence; keep the
    # smallest id of each group so the search is deterministic.
    seen: set[tuple[int, int, int]] = set()
    kept = []
    for e in graph.edges:
        key = (e.tail, e.head, e.color)
        if key not in seen:
            seen.add(key)
            kept.append(e)
    return ColoredDigraph(graph.n, graph.q, tuple(kept), graph.labels)


def find(graph: ColoredDigraph, root: int, alpha, *, workers: int = 1) -> Arborescence | None:
    """Find one arborescence matching the color constraint, or None.

    Runs the deletion search: walk the edges in ascending id and delete any
    edge whose removal keeps the answer feasible.  What remains is itself an
    arborescence with the requested histogram.  Edge ids refer to the input
    graph, whose duplicate same-color parallels are dropped up front.
    """
    constraint = _checked_alpha(graph.q, alpha)
    _checked_root(graph, root)
    _require_loopless(graph)
    if not decide(graph, root, constraint, workers=workers):
        return None
    current = _drop_duplicate_colors(graph)
    for edge_id in [e.id for e in current.edges]:
        candidate = remove_edge(current, edge_id)
        if decide(candidate, root, constraint, workers=workers):
            current = candidate
    return Arborescence(root, tuple(e.id for e in current.edges))


def count_spanning_trees(graph: ColoredMultigraph, alpha, *, workers: int = 1) -> int:
    """Number of spanning trees of an undirected graph with histogram alpha.

    Reduction: orient every edge both ways; spanning trees of the original
    graph correspond to arborescences of the bidirected graph rooted at the
    first vertex.
    """
    if not isinstance(graph, ColoredMultigraph):
        raise ValueError("count_spanning_trees expects an undirected graph")
    from .graph import bidirect

    return count(bidirect(graph), 1, alpha, workers=workers)


def count_functional(graph: ColoredDigraph, alpha, *, workers: int = 1) -> int:
    """Spanning functional subgraphs whose every cycle is a self-loop.

    Counts subgraphs choosing one outgoing edge per vertex with histogram
    alpha.  Unlike the arborescence operations this accepts self-loops, and
    no row or column is deleted from the Laplacian.
    """
    constraint = _checked_alpha(graph.q, alpha)
    lap = build_laplacian(graph, "out")
    bound = max(len(graph.edges), 1) ** graph.n
    floor = max(len(graph.multiplicity_index), 2 * graph.n)
    determinant = det_poly(lap, bound, min_prime=floor, workers=workers)
    return determinant.coeff(constraint)
