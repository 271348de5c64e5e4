"""Lifting a factor decomposition to the cartesian product.

Replacing every bag ``T_x`` of a decomposition of ``g`` by ``T_x x V(h)``
gives a decomposition of ``g □ h`` of width ``(w + 1) * |V(h)| - 1``.
"""

from __future__ import annotations

from decomposition.tree_decomposition import TreeDecomposition, validate
from graphs.core import Graph
from graphs.exceptions import DecompositionValidationError
from utils.logging import get_logger

logger = get_logger(__name__)


def _require_valid(td: TreeDecomposition, g: Graph) -> None:
    report = validate(td, g)
    if not report.ok:
        raise DecompositionValidationError(
            "cannot lift an invalid decomposition: " + "; ".join(report.violations())
        )


def chordal_lift(td_g: TreeDecomposition, g: Graph, h: Graph) -> TreeDecomposition:
    """Bag ``x`` becomes ``{flat(v, w) : v in T_x, w in V(h)}``; same tree."""
    _require_valid(td_g, g)
    hs = h.vertex_count
    bags = [
        frozenset(v * hs + w for v in bag for w in range(hs)) for bag in td_g.bags
    ]
    logger.debug(f"Lifted {td_g.bag_count} bags across {hs} copies.")
    return TreeDecomposition(tuple(bags), td_g.tree_edges)


def chordal_lift_second(g: Graph, td_h: TreeDecomposition, h: Graph) -> TreeDecomposition:
    """The symmetric lift: bag ``x`` becomes ``V(g) x T_x``."""
    _require_valid(td_h, h)
    hs = h.vertex_count
    bags = [
        frozenset(v * hs + w for v in g.vertices for w in bag) for bag in td_h.bags
    ]
    return TreeDecomposition(tuple(bags), td_h.tree_edges)
