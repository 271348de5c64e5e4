"""Chordal graphs and their perfect elimination orderings."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from graphs.core import Graph
from graphs.exceptions import InvariantViolation
from utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ChordalResult:
    chordal: bool
    elimination_order: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def lex_bfs(g: Graph) -> list[int]:
    """Lex-BFS visiting order by partition refinement, smallest id first."""
    partition: list[list[int]] = [list(g.vertices)] if g.vertex_count else []
    order: list[int] = []
    while partition:
        v = partition[0].pop(0)
        if not partition[0]:
            partition.pop(0)
        order.append(v)
        nbrs = g.adjacency[v]
        refined: list[list[int]] = []
        for cell in partition:
            inside = [u for u in cell if u in nbrs]
            outside = [u for u in cell if u not in nbrs]
            refined.extend(part for part in (inside, outside) if part)
        partition = refined
    return order


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    """Each vertex's later neighbours must form a clique. Checked by testing
    that the earliest later neighbour sees all the others."""
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adjacency[v] if position[u] > position[v]]
        if not later:
            continue
        first = min(later, key=position.__getitem__)
        if any(u != first and not g.has_edge(first, u) for u in later):
            return False
    return True


def is_chordal(g: Graph) -> ChordalResult:
    """Recognise chordal graphs, returning a perfect elimination ordering.

    networkx decides chordality; the ordering is reversed Lex-BFS, which
    breaks ties by smallest id so lifts built from it are reproducible.
    """
    if not nx.is_chordal(g.nx_graph):
        return ChordalResult(False)
    order = lex_bfs(g)
    order.reverse()
    if not is_perfect_elimination_order(g, order):
        logger.error(f"reversed Lex-BFS is not a PEO on a chordal graph: {order}")
        raise InvariantViolation("Lex-BFS failed to order a chordal graph")
    return ChordalResult(True, tuple(order))


def clique_number_of_chordal(g: Graph, peo: tuple[int, ...]) -> int:
    """Largest clique of a chordal graph from its elimination ordering."""
    position = {v: i for i, v in enumerate(peo)}
    return max(
        (1 + sum(1 for u in g.adjacency[v] if position[u] > position[v]) for v in peo),
        default=0,
    )
