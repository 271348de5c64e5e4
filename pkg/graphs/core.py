"""Simple undirected graphs and their cartesian products.

Vertices are the integers ``0 .. vertex_count - 1``. In a product of ``g`` and
``h`` the pair ``(v, w)`` lives at flat id ``v * h_size + w``, so the
``v``-copy of ``h`` is a contiguous row and the ``w``-copy of ``g`` a column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import networkx as nx

from graphs.exceptions import InvalidInputError, VertexIndexError
from utils.logging import get_logger

logger = get_logger(__name__)

Edge = tuple[int, int]


def _normalise_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph."""

    vertex_count: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidInputError("vertex_count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if u > v:
                raise InvalidInputError(f"edge {(u, v)} is not normalised")
            if u < 0 or v >= self.vertex_count:
                raise VertexIndexError(
                    f"edge {(u, v)} outside 0..{self.vertex_count - 1}"
                )
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise InvalidInputError("one label per vertex is required")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
        strict: bool = True,
    ) -> "Graph":
        """Build a graph, rejecting loops and (when ``strict``) parallel edges."""
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            e = _normalise_edge(int(u), int(v))
            if e in seen and strict:
                raise InvalidInputError(f"parallel edge {e}")
            seen.add(e)
        return cls(vertex_count, frozenset(seen), labels)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks, for the subset-based solvers."""
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """A networkx view of the graph. Treat it as read-only."""
        gx = nx.Graph()
        gx.add_nodes_from(range(self.vertex_count))
        gx.add_edges_from(sorted(self.edges))
        return gx

    def neighbours(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def has_edge(self, u: int, v: int) -> bool:
        return _normalise_edge(u, v) in self.edges

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise VertexIndexError(f"vertex {v} outside 0..{self.vertex_count - 1}")

    def check_vertices(self, vs: Iterable[int]) -> None:
        for v in vs:
            self.check_vertex(v)

    def induced_edge_count(self, vs: Iterable[int]) -> int:
        chosen = set(vs)
        return sum(1 for u, v in self.edges if u in chosen and v in chosen)

    def relabelled(self, mapping: dict[int, int]) -> "Graph":
        """Apply a vertex permutation."""
        return Graph.from_edges(
            self.vertex_count, ((mapping[u], mapping[v]) for u, v in self.edges)
        )


@dataclass(frozen=True)
class ProductGraph:
    """The cartesian product of ``g`` and ``h`` with its index map."""

    base: Graph
    g: Graph
    h: Graph

    @property
    def g_size(self) -> int:
        return self.g.vertex_count

    @property
    def h_size(self) -> int:
        return self.h.vertex_count

    @property
    def n(self) -> int:
        """The common lower bound on factor sizes used by the product bound."""
        return min(self.g_size, self.h_size)

    def flat(self, v: int, w: int) -> int:
        if not 0 <= v < self.g_size:
            raise VertexIndexError(f"G-vertex {v} outside 0..{self.g_size - 1}")
        if not 0 <= w < self.h_size:
            raise VertexIndexError(f"H-vertex {w} outside 0..{self.h_size - 1}")
        return v * self.h_size + w

    def pair(self, x: int) -> tuple[int, int]:
        self.base.check_vertex(x)
        return divmod(x, self.h_size)

    def copy_of_h(self, v: int) -> frozenset[int]:
        """Flat ids of the ``v``-copy of ``h``."""
        start = self.flat(v, 0)
        return frozenset(range(start, start + self.h_size))

    def copy_of_g(self, w: int) -> frozenset[int]:
        """Flat ids of the ``w``-copy of ``g``."""
        start = self.flat(0, w)
        return frozenset(range(start, self.base.vertex_count, self.h_size))


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """Build ``g □ h``: ``(v,x)(w,y)`` is an edge iff one coordinate is equal
    and the other pair is an edge of its factor."""
    if g.vertex_count < 1 or h.vertex_count < 1:
        raise InvalidInputError("cartesian product needs non-empty factors")

    hs = h.vertex_count
    edges: set[Edge] = set()
    for v in g.vertices:
        for x, y in h.edges:
            edges.add((v * hs + x, v * hs + y))
    for w in h.vertices:
        for u, v in g.edges:
            edges.add((u * hs + w, v * hs + w))

    labels = tuple(f"({v},{w})" for v in g.vertices for w in h.vertices)
    base = Graph(g.vertex_count * hs, frozenset(edges), labels)
    logger.debug(
        f"Built product on {base.vertex_count} vertices and {base.edge_count} edges."
    )
    return ProductGraph(base=base, g=g, h=h)


def copy_of_h(p: ProductGraph, v: int) -> frozenset[int]:
    return p.copy_of_h(v)


def copy_of_g(p: ProductGraph, w: int) -> frozenset[int]:
    return p.copy_of_g(w)
