"""Exact bandwidth by branch and bound over partial orderings.

For each candidate width ``b``, starting at a lower bound, vertices are laid
out left to right. A placed vertex at position ``p`` forces its remaining
neighbours into positions ``<= p + b``; partial layouts that cannot meet
these deadlines are cut. Failed states are memoised on the placed set plus
the last ``b`` vertices, the only ones still constraining the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import networkx as nx

from graphs.core import Graph
from graphs.exceptions import InvalidInputError, ResourceLimitError
from ordering.orderings import VertexOrdering, ordering_width
from utils.budget import Budget
from utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_CEILING = 12


@dataclass(frozen=True)
class BandwidthResult:
    width: int
    ordering: VertexOrdering
    certified: bool


def bandwidth_lower_bound(g: Graph) -> int:
    """``ceil(max degree / 2)`` and, per component, ``ceil((|C| - 1) / diam C)``."""
    if not g.edges:
        return 0
    lb = ceil(max(len(a) for a in g.adjacency) / 2)
    for comp in nx.connected_components(g.nx_graph):
        if len(comp) > 1:
            diam = nx.diameter(g.nx_graph.subgraph(comp))
            lb = max(lb, ceil((len(comp) - 1) / diam))
    return lb


class _Layout:
    """Depth-first layout for one target width ``b >= 1``."""

    def __init__(self, g: Graph, b: int, budget: Budget) -> None:
        self.b = b
        self.budget = budget
        self.n = g.vertex_count
        self.adj = g.adjacency
        self.order: list[int] = []
        self.pos: dict[int, int] = {}
        self.failed: set[tuple[int, tuple[int, ...]]] = set()

    def _deadlines(self) -> list[int]:
        """Latest admissible position of every unplaced vertex that has a
        placed neighbour, sorted."""
        due: dict[int, int] = {}
        for u, p in self.pos.items():
            for w in self.adj[u]:
                if w not in self.pos:
                    due[w] = min(due.get(w, p + self.b), p + self.b)
        return sorted(due.values())

    def _feasible(self) -> bool:
        # the i-th earliest deadline needs the i-th next free slot
        nxt = len(self.order) + 1
        return all(d >= nxt + i for i, d in enumerate(self._deadlines()))

    def search(self, mask: int = 0) -> bool:
        if len(self.order) == self.n:
            return True
        key = (mask, tuple(self.order[-self.b :]))
        if key in self.failed:
            return False
        self.budget.tick("bandwidth")
        nxt = len(self.order) + 1
        forced = {
            w
            for u, p in self.pos.items()
            if p + self.b == nxt
            for w in self.adj[u]
            if w not in self.pos
        }
        candidates = sorted(forced) if forced else [v for v in range(self.n) if v not in self.pos]
        for v in candidates:
            self.pos[v] = nxt
            self.order.append(v)
            if self._feasible() and self.search(mask | (1 << v)):
                return True
            self.order.pop()
            del self.pos[v]
        self.failed.add(key)
        return False


def exact_bandwidth(
    g: Graph, budget: Budget | None = None, ceiling: int = DEFAULT_CEILING
) -> BandwidthResult:
    """Minimum ordering width of ``g`` with a witness ordering.

    Widths are tried upward from :func:`bandwidth_lower_bound`, so the first
    feasible one is optimal. On budget exhaustion the best ordering known so
    far is returned with ``certified=False``.
    """
    if g.vertex_count > ceiling:
        raise ResourceLimitError(
            f"exact bandwidth limited to {ceiling} vertices, graph has {g.vertex_count}"
        )
    if g.vertex_count == 0:
        raise InvalidInputError("bandwidth of the empty graph is undefined")
    budget = (budget or Budget()).start()

    best = VertexOrdering.identity(g.vertex_count)
    best_width = ordering_width(g, best)
    b = max(bandwidth_lower_bound(g), 1)
    while b < best_width:
        layout = _Layout(g, b, budget)
        try:
            found = layout.search()
        except ResourceLimitError as exc:
            logger.warning(f"Bandwidth search stopped at width {b}: {exc}")
            return BandwidthResult(best_width, best, certified=False)
        if found:
            best = VertexOrdering.from_sequence(layout.order)
            best_width = ordering_width(g, best)
            break
        b += 1
    logger.debug(f"Bandwidth {best_width} on {g.vertex_count} vertices, {budget.nodes} nodes.")
    return BandwidthResult(best_width, best, certified=True)
