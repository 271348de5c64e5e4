"""Exact treewidth by dynamic programming over eliminated vertex sets.

For an eliminated set ``S`` and a next vertex ``v`` the cost of eliminating
``v`` is ``|Q(S, v)|``: the vertices outside ``S + v`` reachable from ``v``
through ``S``. ``TW(S + v) = min max(TW(S), |Q(S, v)|)``; treewidth is
``TW(V)``. Sets are bitmasks, processed level by level, and only sets whose
value beats the heuristic upper bound are kept.
"""

from __future__ import annotations

from dataclasses import dataclass

from decomposition.elimination import (
    best_heuristic,
    decomposition_from_elimination_order,
    minor_min_width,
)
from decomposition.tree_decomposition import TreeDecomposition, validate, width
from graphs.core import Graph
from graphs.exceptions import (
    InvalidInputError,
    InvariantViolation,
    ResourceLimitError,
)
from utils.budget import Budget
from utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_CEILING = 25


@dataclass(frozen=True)
class TreewidthResult:
    treewidth: int
    decomposition: TreeDecomposition
    states: int


def _q_size(adj: tuple[int, ...], s_mask: int, v: int) -> int:
    comp = 1 << v
    outside = 0
    stack = [v]
    while stack:
        u = stack.pop()
        nb = adj[u]
        outside |= nb & ~s_mask
        inner = nb & s_mask & ~comp
        comp |= inner
        while inner:
            low = inner & -inner
            stack.append(low.bit_length() - 1)
            inner ^= low
    outside &= ~(1 << v)
    return outside.bit_count()


def _search(g: Graph, ub: int, budget: Budget) -> tuple[int, list[int]] | None:
    """Return ``(tw, order)`` if some order beats ``ub``, else ``None``."""
    n = g.vertex_count
    adj = g.adjacency_masks
    full = (1 << n) - 1

    # levels[i] maps each kept i-set to (value, previous set, last vertex)
    levels: list[dict[int, tuple[int, int, int]]] = [{0: (-1, -1, -1)}]
    shortcut: tuple[int, int, int] | None = None  # (value, level, set)

    for size in range(n):
        nxt: dict[int, tuple[int, int, int]] = {}
        for s_mask, (value, _, _) in levels[size].items():
            # eliminating the remaining vertices in any order costs at most
            # n - |S| - 1, so stop as soon as that cannot hurt
            rest = n - size - 1
            if max(value, rest) < ub:
                ub = max(value, rest)
                shortcut = (ub, size, s_mask)
            for v in range(n):
                if s_mask >> v & 1:
                    continue
                budget.tick("exact treewidth")
                r = max(value, _q_size(adj, s_mask, v))
                if r >= ub:
                    continue
                t = s_mask | 1 << v
                prev = nxt.get(t)
                if prev is None or r < prev[0]:
                    nxt[t] = (r, s_mask, v)
        levels.append(nxt)
        logger.debug(f"treewidth DP level {size + 1}: {len(nxt)} sets below {ub}.")
        if not nxt:
            break

    if full in levels[-1] and levels[-1][full][0] < ub:
        value, level, mask = levels[-1][full][0], n, full
    elif shortcut is not None and shortcut[0] == ub:
        value, level, mask = shortcut
    else:
        return None

    order: list[int] = []
    while level > 0:
        _, prev, v = levels[level][mask]
        order.append(v)
        mask, level = prev, level - 1
    order.reverse()
    chosen = set(order)
    order.extend(v for v in range(n) if v not in chosen)
    return value, order


def exact_treewidth(
    g: Graph, budget: Budget | None = None, ceiling: int = DEFAULT_CEILING
) -> TreewidthResult:
    """Exact treewidth with a witnessing decomposition.

    Raises ResourceLimitError when ``g`` exceeds ``ceiling`` vertices or the
    budget runs out; callers fall back to bounds.
    """
    if g.vertex_count > ceiling:
        raise ResourceLimitError(
            f"{g.vertex_count} vertices exceed the exact ceiling of {ceiling}"
        )
    budget = (budget or Budget.unlimited()).start()

    if g.vertex_count == 0:
        raise InvalidInputError("treewidth of the empty graph is undefined")

    ub, td, _ = best_heuristic(g)
    lb = minor_min_width(g)
    logger.debug(f"exact treewidth on {g.vertex_count} vertices: lb={lb}, ub={ub}.")

    if lb < ub:
        found = _search(g, ub, budget)
        if found is not None:
            ub, order = found
            td = decomposition_from_elimination_order(g, order)

    if width(td) != ub or not validate(td, g).ok:
        raise InvariantViolation("exact treewidth witness does not match its value")
    logger.info(f"treewidth of {g.vertex_count}-vertex graph is {ub} ({budget.nodes} states).")
    return TreewidthResult(ub, td, budget.nodes)
