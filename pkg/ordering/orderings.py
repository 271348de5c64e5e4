"""Vertex orderings and their width.

Positions are 1-based: ``positions[v]`` is the place of vertex ``v``. The
width of an ordering is the largest ``|pos(v) - pos(w)|`` over edges, and
bandwidth, the minimum width, bounds treewidth from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from graphs.core import Graph, ProductGraph
from graphs.exceptions import InvalidInputError, StructuralError


@dataclass(frozen=True)
class VertexOrdering:
    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.positions) != list(range(1, len(self.positions) + 1)):
            raise StructuralError("positions must be a bijection onto 1..N")

    @classmethod
    def from_sequence(cls, sequence: Sequence[int]) -> "VertexOrdering":
        """Build from the vertices listed in order of position."""
        positions = [0] * len(sequence)
        for pos, v in enumerate(sequence, 1):
            if not 0 <= v < len(sequence):
                raise StructuralError(f"vertex {v} outside 0..{len(sequence) - 1}")
            positions[v] = pos
        return cls(tuple(positions))

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(1, n + 1)))

    def sequence(self) -> list[int]:
        """Vertices in order of position."""
        seq = [0] * len(self.positions)
        for v, pos in enumerate(self.positions):
            seq[pos - 1] = v
        return seq

    def reverse(self) -> "VertexOrdering":
        n = len(self.positions)
        return VertexOrdering(tuple(n + 1 - p for p in self.positions))

    def to_line(self) -> str:
        return " ".join(str(p) for p in self.positions)

    @classmethod
    def from_line(cls, line: str) -> "VertexOrdering":
        try:
            return cls(tuple(int(x) for x in line.split()))
        except ValueError:
            raise StructuralError(f"ordering line is not integers: '{line}'") from None


def ordering_width(g: Graph, o: VertexOrdering) -> int:
    if len(o.positions) != g.vertex_count:
        raise StructuralError(
            f"ordering has {len(o.positions)} positions for {g.vertex_count} vertices"
        )
    pos = o.positions
    return max((abs(pos[u] - pos[v]) for u, v in g.edges), default=0)


def _require(n: int, k: int) -> None:
    if not 1 <= k < n:
        raise InvalidInputError(f"need 1 <= k < n, got n={n}, k={k}")


def _keyed(n: int, key: Callable[[int, int], int]) -> VertexOrdering:
    """Order the flat ids of an n x n product by ``key(x, y)`` on 1-based
    coordinates."""
    cells = sorted(range(n * n), key=lambda f: key(f // n + 1, f % n + 1))
    return VertexOrdering.from_sequence(cells)


def row_major_ordering(n: int, k: int) -> VertexOrdering:
    """``(x, y) -> (x - 1) n + y`` on P_n^k □ P_n^k; width ``kn``."""
    _require(n, k)
    return _keyed(n, lambda x, y: (x - 1) * n + y)


def improved_ordering(n: int, k: int) -> VertexOrdering:
    """Order by ``x (n + 1) + y n``, i.e. by anti-diagonal then by ``x``.
    Keys are distinct for ``1 <= x, y <= n``."""
    _require(n, k)
    return _keyed(n, lambda x, y: x * (n + 1) + y * n)


def product_ordering(
    p: ProductGraph, order_g: VertexOrdering, order_h: VertexOrdering
) -> VertexOrdering:
    """Row-major ordering driven by factor orderings: rows follow ``order_g``
    and positions inside a row follow ``order_h``. Width is at most
    ``max(width_h, width_g * |V(h)|)``."""
    if len(order_g.positions) != p.g_size or len(order_h.positions) != p.h_size:
        raise StructuralError("factor orderings do not match the product")
    hs = p.h_size
    return VertexOrdering(
        tuple(
            (order_g.positions[v] - 1) * hs + order_h.positions[w]
            for v in range(p.g_size)
            for w in range(hs)
        )
    )


def transposed_product_ordering(
    p: ProductGraph, order_g: VertexOrdering, order_h: VertexOrdering
) -> VertexOrdering:
    """Column-major counterpart of :func:`product_ordering`."""
    if len(order_g.positions) != p.g_size or len(order_h.positions) != p.h_size:
        raise StructuralError("factor orderings do not match the product")
    gs = p.g_size
    return VertexOrdering(
        tuple(
            (order_h.positions[w] - 1) * gs + order_g.positions[v]
            for v in range(gs)
            for w in range(p.h_size)
        )
    )
