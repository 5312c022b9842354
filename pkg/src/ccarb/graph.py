"""Edge-colored multidigraph model: file parsing, indexing, transforms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class GraphParseError(ValueError):
    """Malformed graph file; the message names the offending line."""


def _parse_fail(line_no: int, message: str) -> GraphParseError:
    return GraphParseError(f"line {line_no}: {message}")


@dataclass(frozen=True)
class Edge:
    """One arc (or undirected edge): endpoints, color, optional weight."""

    id: int
    tail: int
    head: int
    color: int
    weight: int | None = None


def _validate_edges(n: int, q: int, edges: tuple[Edge, ...], labels: tuple[str, ...]) -> None:
    if n < 1:
        raise ValueError("vertex count must be positive")
    if q < 1:
        raise ValueError("color count must be positive")
    if len(labels) > n:
        raise ValueError("more labels than vertices")
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate vertex labels")
    seen_ids = set()
    for e in edges:
        if e.id in seen_ids:
            raise ValueError(f"duplicate edge id {e.id}")
        seen_ids.add(e.id)
        if not (1 <= e.tail <= n and 1 <= e.head <= n):
            raise ValueError(f"edge {e.id}: endpoint out of range 1..{n}")
        if not (1 <= e.color <= q):
            raise ValueError(f"edge {e.id}: color out of range 1..{q}")
        if e.weight is not None and e.weight < 1:
            raise ValueError(f"edge {e.id}: weight must be >= 1")


class _GraphBase:
    """Shared lookups for the directed and undirected graph types."""

    n: int
    q: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...]

    @cached_property
    def multiplicity_index(self) -> dict[tuple[int, int, int], int]:
        """Map (tail, head, color) to the number of parallel edges."""
        index: dict[tuple[int, int, int], int] = {}
        for e in self.edges:
            key = (e.tail, e.head, e.color)
            index[key] = index.get(key, 0) + 1
        return index

    @cached_property
    def _edges_by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._edges_by_id[edge_id]
        except KeyError:
            raise ValueError(f"unknown edge id {edge_id}") from None

    @property
    def weighted(self) -> bool:
        return all(e.weight is not None for e in self.edges)

    @property
    def has_self_loops(self) -> bool:
        return any(e.tail == e.head for e in self.edges)

    def vertex_index(self, label: str) -> int:
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise ValueError(f"unknown vertex label {label!r}") from None

    def vertex_label(self, index: int) -> str:
        if not (1 <= index <= len(self.labels)):
            raise ValueError(f"vertex {index} has no label")
        return self.labels[index - 1]


@dataclass(frozen=True)
class ColoredDigraph(_GraphBase):
    """A q-colored multidigraph on vertices 1..n.

    Vertices are 1-based indices; `labels[i-1]` names vertex i for the first
    `len(labels)` vertices (the file parser assigns labels by first
    appearance).  Edge ids are stable input-order ordinals and every loop
    over edges runs in ascending id.  Self-loops are allowed structurally
    (the functional-subgraph counter needs them) but rejected by the parser
    and by the arborescence operations.  Instances are immutable; transforms
    return new graphs.
    """

    n: int
    q: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        _validate_edges(self.n, self.q, self.edges, self.labels)


@dataclass(frozen=True)
class ColoredMultigraph(_GraphBase):
    """An undirected q-colored multigraph; `tail`/`head` are the endpoints."""

    n: int
    q: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        _validate_edges(self.n, self.q, self.edges, self.labels)


def parse_graph(text: str) -> ColoredDigraph | ColoredMultigraph:
    """Parse a graph file.

    First significant line: ``n q``.  An optional ``directed`` or
    ``undirected`` line may follow (default directed).  Every further line is
    one edge, ``tail head color`` or ``tail head color weight``; a file must
    not mix weighted and unweighted edge lines.  Lines starting with ``#``
    and blank lines are ignored.  Vertex labels are arbitrary
    whitespace-free strings, numbered 1..n by first appearance.
    """
    header: tuple[int, int] | None = None
    directed: bool | None = None
    weighted: bool | None = None
    labels: list[str] = []
    label_index: dict[str, int] = {}
    edges: list[Edge] = []

    def vertex(token: str, line_no: int) -> int:
        idx = label_index.get(token)
        if idx is None:
            if header is not None and len(labels) >= header[0]:
                raise _parse_fail(line_no, f"more than {header[0]} distinct vertex labels")
            labels.append(token)
            idx = len(labels)
            label_index[token] = idx
        return idx

    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if header is None:
            if len(fields) != 2:
                raise _parse_fail(line_no, "expected header 'n q'")
            try:
                n, q = int(fields[0]), int(fields[1])
            except ValueError:
                raise _parse_fail(line_no, "header values must be integers") from None
            if n < 1 or q < 1:
                raise _parse_fail(line_no, "vertex and color counts must be positive")
            header = (n, q)
            continue
        if len(fields) == 1 and fields[0] in ("directed", "undirected"):
            if directed is not None:
                raise _parse_fail(line_no, "duplicate orientation header")
            if edges:
                raise _parse_fail(line_no, "orientation header must precede edge lines")
            directed = fields[0] == "directed"
            continue
        if len(fields) not in (3, 4):
            raise _parse_fail(line_no, f"expected an edge line with 3 or 4 fields, got {len(fields)}")
        has_weight = len(fields) == 4
        if weighted is None:
            weighted = has_weight
        elif weighted != has_weight:
            raise _parse_fail(line_no, "mixed weighted and unweighted edge lines")
        tail = vertex(fields[0], line_no)
        head = vertex(fields[1], line_no)
        if tail == head:
            raise _parse_fail(line_no, f"self-loop at vertex {fields[0]!r}")
        try:
            color = int(fields[2])
        except ValueError:
            raise _parse_fail(line_no, "color must be an integer") from None
        if not (1 <= color <= header[1]):
            raise _parse_fail(line_no, f"color {color} out of range 1..{header[1]}")
        weight = None
        if has_weight:
            try:
                weight = int(fields[3])
            except ValueError:
                raise _parse_fail(line_no, "weight must be an integer") from None
            if weight < 1:
                raise _parse_fail(line_no, f"weight must be positive, got {weight}")
        edges.append(Edge(len(edges), tail, head, color, weight))

    if header is None:
        raise _parse_fail(1, "missing header 'n q'")
    cls = ColoredDigraph if directed in (None, True) else ColoredMultigraph
    return cls(header[0], header[1], tuple(edges), tuple(labels))


def reverse(graph: ColoredDigraph) -> ColoredDigraph:
    """Flip every arc; ids, colors and weights are preserved."""
    flipped = tuple(Edge(e.id, e.head, e.tail, e.color, e.weight) for e in graph.edges)
    return ColoredDigraph(graph.n, graph.q, flipped, graph.labels)


def dedup_min_weight(graph: ColoredDigraph) -> ColoredDigraph:
    """Keep only a minimum-weight edge in each parallel same-color group.

    Requires all edges weighted.  Ties are broken by the smallest edge id
    (strict comparison while scanning in ascending id keeps the earliest).
    """
    if not graph.weighted:
        raise ValueError("dedup_min_weight requires all edges to carry weights")
    best: dict[tuple[int, int, int], Edge] = {}
    for e in graph.edges:
        key = (e.tail, e.head, e.color)
        kept = best.get(key)
        if kept is None or e.weight < kept.weight:
            best[key] = e
    survivors = tuple(sorted(best.values(), key=lambda e: e.id))
    return ColoredDigraph(graph.n, graph.q, survivors, graph.labels)


def remove_in_arcs(graph: ColoredDigraph, vertex: int) -> ColoredDigraph:
    """Delete every arc whose head is `vertex`."""
    if not (1 <= vertex <= graph.n):
        raise ValueError(f"vertex {vertex} out of range 1..{graph.n}")
    kept = tuple(e for e in graph.edges if e.head != vertex)
    return ColoredDigraph(graph.n, graph.q, kept, graph.labels)


def remove_edge(graph: ColoredDigraph, edge_id: int) -> ColoredDigraph:
    """Delete the edge with the given id."""
    graph.edge(edge_id)
    kept = tuple(e for e in graph.edges if e.id != edge_id)
    return ColoredDigraph(graph.n, graph.q, kept, graph.labels)


def bidirect(graph: ColoredMultigraph) -> ColoredDigraph:
    """Replace each undirected edge {u, v} by the arc pair (u, v), (v, u)."""
    arcs: list[Edge] = []
    for e in graph.edges:
        arcs.append(Edge(len(arcs), e.tail, e.head, e.color, e.weight))
        arcs.append(Edge(len(arcs), e.head, e.tail, e.color, e.weight))
    return ColoredDigraph(graph.n, graph.q, tuple(arcs), graph.labels)
