"""Vertex connectivity and connected vertex subsets."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import networkx as nx
from networkx.algorithms.connectivity import local_node_connectivity

from graphs.core import Graph
from graphs.exceptions import InvalidInputError
from utils.logging import get_logger

logger = get_logger(__name__)


@lru_cache(maxsize=256)
def vertex_connectivity(g: Graph) -> int:
    """Return kappa(g), the size of a minimum vertex cut.

    Each non-adjacent pair is separated by a unit-capacity max flow on the
    split-vertex auxiliary digraph (Menger). A complete graph has no
    separating set and is assigned ``n - 1``.
    """
    if g.vertex_count < 2:
        raise InvalidInputError("vertex connectivity needs at least 2 vertices")

    n = g.vertex_count
    if g.edge_count == n * (n - 1) // 2:
        return n - 1

    gx = g.nx_graph
    if not nx.is_connected(gx):
        return 0

    # A minimum cut misses some vertex among any kappa + 1 vertices, so it
    # suffices to use the lowest-degree vertex and its neighbours as sources.
    source = min(g.vertices, key=lambda v: (g.degree(v), v))
    best = g.degree(source)
    candidates = [source] + sorted(g.adjacency[source])
    for i, s in enumerate(candidates):
        if i > best:
            break
        for t in g.vertices:
            if t == s or g.has_edge(s, t):
                continue
            best = min(best, local_node_connectivity(gx, s, t, cutoff=best))
    logger.debug(f"vertex connectivity of {n}-vertex graph is {best}.")
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """k-connected: more than k vertices and no cut of fewer than k vertices."""
    if k <= 0:
        return True
    if g.vertex_count <= k:
        return False
    return vertex_connectivity(g) >= k


def is_connected_subset(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` is non-empty and induces a connected subgraph."""
    chosen = frozenset(s)
    g.check_vertices(chosen)
    if not chosen:
        return False
    return nx.is_connected(g.nx_graph.subgraph(chosen))
