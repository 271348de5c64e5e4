"""Elimination orderings: decompositions from orders, greedy upper bounds
and the minor-min-width lower bound."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from decomposition.tree_decomposition import TreeDecomposition, normalize, width
from graphs.core import Graph
from graphs.exceptions import InvalidInputError
from utils.logging import get_logger

logger = get_logger(__name__)


class Strategy(str, Enum):
    MIN_DEGREE = "min_degree"
    MIN_FILL = "min_fill"


def _fill_in(adj: dict[int, set[int]], v: int) -> int:
    nbrs = sorted(adj[v])
    return sum(
        1 for i, a in enumerate(nbrs) for b in nbrs[i + 1 :] if b not in adj[a]
    )


def _eliminate(adj: dict[int, set[int]], v: int) -> set[int]:
    nbrs = adj.pop(v)
    for a in nbrs:
        adj[a].discard(v)
        adj[a].update(nbrs - {a})
    return nbrs


def decomposition_from_elimination_order(
    g: Graph, order: Sequence[int]
) -> TreeDecomposition:
    """Turn an elimination order into a normalised tree decomposition.

    The bag of ``v`` is ``v`` plus its neighbours at elimination time; it
    hangs below the bag of the neighbour eliminated next. Components are
    chained so the result is a single tree.
    """
    if sorted(order) != list(g.vertices):
        raise InvalidInputError("elimination order must list every vertex once")
    if g.vertex_count == 0:
        raise InvalidInputError("cannot decompose the empty graph")

    position = {v: i for i, v in enumerate(order)}
    adj = {v: set(g.adjacency[v]) for v in g.vertices}
    bags: list[frozenset[int]] = []
    edges: list[tuple[int, int]] = []
    roots: list[int] = []
    later: list[set[int]] = []
    for v in order:
        later.append(_eliminate(adj, v))
        bags.append(frozenset(later[-1] | {v}))
    for i, v in enumerate(order):
        if later[i]:
            parent = min(position[u] for u in later[i])
            edges.append((i, parent))
        else:
            roots.append(i)
    edges.extend(zip(roots, roots[1:]))
    return normalize(TreeDecomposition.build(bags, edges))


def greedy_order(g: Graph, strategy: Strategy | str) -> list[int]:
    """Repeatedly eliminate the vertex minimising the strategy's score.
    Ties go to the smallest vertex id."""
    strategy = Strategy(strategy)
    adj = {v: set(g.adjacency[v]) for v in g.vertices}
    order: list[int] = []
    while adj:
        if strategy is Strategy.MIN_DEGREE:
            _, v = min((len(adj[u]), u) for u in adj)
        else:
            _, v = min((_fill_in(adj, u), u) for u in adj)
        _eliminate(adj, v)
        order.append(v)
    return order


def heuristic_upper_bound(
    g: Graph, strategy: Strategy | str = Strategy.MIN_FILL
) -> tuple[int, TreeDecomposition]:
    """Greedy elimination upper bound with its witnessing decomposition."""
    order = greedy_order(g, strategy)
    td = decomposition_from_elimination_order(g, order)
    w = width(td)
    logger.debug(f"{Strategy(strategy).value} upper bound {w} on {g.vertex_count} vertices.")
    return w, td


def best_heuristic(g: Graph) -> tuple[int, TreeDecomposition, list[int]]:
    """The better of both strategies, with its elimination order."""
    best: tuple[int, TreeDecomposition, list[int]] | None = None
    for strategy in Strategy:
        order = greedy_order(g, strategy)
        td = decomposition_from_elimination_order(g, order)
        if best is None or width(td) < best[0]:
            best = (width(td), td, order)
    assert best is not None
    return best


def minor_min_width(g: Graph) -> int:
    """Treewidth lower bound: contract a minimum-degree vertex into its
    neighbour with fewest common neighbours, tracking the largest minimum
    degree seen."""
    adj = {v: set(g.adjacency[v]) for v in g.vertices}
    best = 0
    while adj:
        d, u = min((len(adj[v]), v) for v in adj)
        best = max(best, d)
        nbrs = adj.pop(u)
        if not nbrs:
            continue
        _, w = min((len(adj[x] & nbrs), x) for x in nbrs)
        for x in nbrs:
            adj[x].discard(u)
        for x in nbrs - {w}:
            adj[x].add(w)
            adj[w].add(x)
    return best
