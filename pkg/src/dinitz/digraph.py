"""Immutable directed graphs on dense 0-based integer vertex ids.

Every graph here is an orientation of a simple graph: self-loops are
rejected, and at most one of (u, v) and (v, u) may be present.  Vertex
subsets are plain iterables of ints; internally the exhaustive routines
work on arbitrary-precision int bitmasks, so subsets of any size get the
machine-word treatment.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import AbstractSet, Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Invalid graph construction or query input."""


class VertexRangeError(GraphError):
    """A vertex id falls outside [0, num_vertices)."""


class SelfLoopError(GraphError):
    """An edge (v, v) was supplied."""


class BidirectionalEdgeError(GraphError):
    """Both (u, v) and (v, u) were supplied."""


@dataclass(frozen=True)
class Digraph:
    """A directed graph stored as per-vertex successor sets.

    Construct through :func:`make_digraph`, which validates the
    orientation invariants; the raw constructor trusts its input.
    Instances are immutable and safe to share across threads.
    """

    num_vertices: int
    succ: tuple[frozenset[int], ...]

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        """All edges as ordered (u, v) pairs."""
        return frozenset(
            (u, v) for u in range(self.num_vertices) for v in self.succ[u]
        )

    @cached_property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.succ)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        """Bitmask of out-neighbors per vertex."""
        masks = []
        for vs in self.succ:
            m = 0
            for v in vs:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Bitmask of neighbors per vertex, ignoring edge direction."""
        masks = [0] * self.num_vertices
        for u in range(self.num_vertices):
            for v in self.succ[u]:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        return tuple(masks)

    def __repr__(self) -> str:
        return f"Digraph(num_vertices={self.num_vertices}, num_edges={self.num_edges})"


def make_digraph(num_vertices: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """Build a validated digraph.

    Duplicate edges collapse silently.  Raises :class:`VertexRangeError`,
    :class:`SelfLoopError` or :class:`BidirectionalEdgeError` for the
    three ways an input can break the orientation invariants.
    """
    if num_vertices < 0:
        raise VertexRangeError(f"num_vertices must be non-negative, got {num_vertices}")
    succ: list[set[int]] = [set() for _ in range(num_vertices)]
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise VertexRangeError(
                f"edge ({u}, {v}) has an endpoint outside [0, {num_vertices})"
            )
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if u in succ[v]:
            raise BidirectionalEdgeError(
                f"both ({v}, {u}) and ({u}, {v}) were given; orientations allow only one"
            )
        succ[u].add(v)
    return Digraph(num_vertices, tuple(frozenset(s) for s in succ))


def vertex_subset(g: Digraph, vertices: Iterable[int]) -> frozenset[int]:
    """Normalize an iterable of vertex ids, checking range."""
    members = frozenset(vertices)
    for v in members:
        if not 0 <= v < g.num_vertices:
            raise VertexRangeError(f"vertex {v} out of range [0, {g.num_vertices})")
    return members


def outdegree(g: Digraph, v: int) -> int:
    """Number of edges leaving v."""
    if not 0 <= v < g.num_vertices:
        raise VertexRangeError(f"vertex {v} out of range [0, {g.num_vertices})")
    return len(g.succ[v])


def induced_subgraph(
    g: Digraph, vertices: Iterable[int]
) -> tuple[Digraph, dict[int, int]]:
    """Subgraph on the given vertices, relabeled densely.

    Keeps exactly the edges with both endpoints in the subset and returns
    the old-id -> new-id relabeling alongside the new graph.  Old ids are
    assigned new ids in ascending order.
    """
    members = vertex_subset(g, vertices)
    order = sorted(members)
    relabel = {old: new for new, old in enumerate(order)}
    succ = tuple(
        frozenset(relabel[w] for w in g.succ[old] if w in members) for old in order
    )
    return Digraph(len(order), succ), relabel


def is_independent(g: Digraph, vertices: Iterable[int]) -> bool:
    """True iff no edge of g, in either direction, joins two of the vertices."""
    members = vertex_subset(g, vertices)
    mask = 0
    for v in members:
        mask |= 1 << v
    adj = g.adj_masks
    return all(not adj[v] & mask for v in members)


@dataclass(frozen=True)
class ColoringReport:
    """Outcome of a proper-list-coloring check.

    ``reason`` is one of "uncolored-vertex", "color-not-in-list" or
    "edge-conflict" when invalid; ``witness`` is the offending vertex id
    or edge pair.
    """

    valid: bool
    reason: str = ""
    witness: int | tuple[int, int] | None = None


def verify_list_coloring(
    g: Digraph,
    lists: Sequence[AbstractSet[int]],
    coloring: Mapping[int, int],
) -> ColoringReport:
    """Check that a coloring is proper and drawn from the given lists.

    Violations are reported in a fixed order: missing vertices first,
    then colors outside their list (ascending vertex), then conflicting
    edges (ascending pair).
    """
    if len(lists) != g.num_vertices:
        raise ValueError(
            f"expected {g.num_vertices} color lists, got {len(lists)}"
        )
    for v in range(g.num_vertices):
        if v not in coloring:
            return ColoringReport(False, "uncolored-vertex", v)
    for v in range(g.num_vertices):
        if coloring[v] not in lists[v]:
            return ColoringReport(False, "color-not-in-list", v)
    for u, v in sorted(g.edges):
        if coloring[u] == coloring[v]:
            return ColoringReport(False, "edge-conflict", (u, v))
    return ColoringReport(True)


def parse_digraph(text: str) -> Digraph:
    """Parse the plain-text digraph format: "n m" then m lines "u v"."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("digraph text needs a header line 'n m'")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"digraph text contains a non-integer token: {exc}") from None
    n, m = values[0], values[1]
    if len(values) != 2 + 2 * m:
        raise ValueError(
            f"header declares {m} edges but {len(values) - 2} ints follow"
        )
    pairs = [(values[i], values[i + 1]) for i in range(2, len(values), 2)]
    return make_digraph(n, pairs)


def format_digraph(g: Digraph) -> str:
    """Serialize to the plain-text format, edges sorted lexicographically."""
    lines = [f"{g.num_vertices} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
