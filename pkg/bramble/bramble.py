"""Brambles: pairwise touching connected vertex sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from graphs.connectivity import is_connected_subset
from graphs.core import Graph
from graphs.exceptions import InvalidInputError, StructuralError
from graphs.generators import grid
from utils.logging import get_logger

logger = get_logger(__name__)


def touch(x: Iterable[int], y: Iterable[int], g: Graph) -> bool:
    """Two sets touch if they share a vertex or an edge of ``g`` joins them."""
    xs, ys = frozenset(x), frozenset(y)
    g.check_vertices(xs)
    g.check_vertices(ys)
    if xs & ys:
        return True
    small, large = (xs, ys) if len(xs) <= len(ys) else (ys, xs)
    return any(not g.adjacency[v].isdisjoint(large) for v in small)


@dataclass(frozen=True)
class Bramble:
    """An explicit list of elements on a host graph. Duplicates are dropped
    on construction, keeping first occurrences in order."""

    host: Graph
    elements: tuple[frozenset[int], ...]

    @classmethod
    def build(cls, host: Graph, elements: Iterable[Iterable[int]]) -> "Bramble":
        seen: dict[frozenset[int], None] = {}
        for e in elements:
            element = frozenset(e)
            if not element:
                raise StructuralError("bramble elements must be non-empty")
            host.check_vertices(element)
            seen.setdefault(element, None)
        return cls(host, tuple(seen))

    def __len__(self) -> int:
        return len(self.elements)


@dataclass
class BrambleReport:
    disconnected_elements: list[int] = field(default_factory=list)
    non_touching_pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.disconnected_elements or self.non_touching_pairs)

    def violations(self) -> list[str]:
        out = [f"element {i + 1} is not connected" for i in self.disconnected_elements]
        out += [
            f"elements {i + 1} and {j + 1} do not touch" for i, j in self.non_touching_pairs
        ]
        return out


def validate_bramble(b: Bramble) -> BrambleReport:
    """Report every disconnected element and every non-touching pair
    (element indices are 0-based here, 1-based in messages)."""
    report = BrambleReport()
    for i, element in enumerate(b.elements):
        if not element:
            raise StructuralError(f"element {i + 1} is empty")
        if not is_connected_subset(b.host, element):
            report.disconnected_elements.append(i)
    for i, j in combinations(range(len(b.elements)), 2):
        if not touch(b.elements[i], b.elements[j], b.host):
            report.non_touching_pairs.append((i, j))
    if not report.ok:
        logger.debug(f"Bramble invalid: {report.violations()[:5]}")
    return report


def cross_bramble(size: int) -> Bramble:
    """The crosses of the ``size x size`` grid: row ``i`` plus column ``j``,
    at element index ``i * size + j``."""
    if size < 1:
        raise InvalidInputError("cross bramble needs a positive side length")
    host = grid(size)
    elements = [
        {i * size + c for c in range(size)} | {r * size + j for r in range(size)}
        for i in range(size)
        for j in range(size)
    ]
    return Bramble.build(host, elements)
