"""Tree decompositions: structure, validation against a host, width."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from graphs.core import Graph
from graphs.exceptions import InvalidInputError, StructuralError
from utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by tree nodes ``0 .. bag_count - 1``."""

    bags: tuple[frozenset[int], ...]
    tree_edges: frozenset[tuple[int, int]]

    @classmethod
    def build(
        cls, bags: Sequence[Iterable[int]], tree_edges: Iterable[tuple[int, int]]
    ) -> "TreeDecomposition":
        return cls(
            tuple(frozenset(b) for b in bags),
            frozenset((a, b) if a < b else (b, a) for a, b in tree_edges),
        )

    @property
    def bag_count(self) -> int:
        return len(self.bags)

    @cached_property
    def tree(self) -> nx.Graph:
        t = nx.Graph()
        t.add_nodes_from(range(self.bag_count))
        t.add_edges_from(sorted(self.tree_edges))
        return t

    def check_structure(self) -> None:
        """Raise StructuralError unless the tree edges form a tree on the bags."""
        if self.bag_count == 0:
            raise StructuralError("decomposition has no bags")
        for a, b in self.tree_edges:
            if a == b or not (0 <= a < self.bag_count and 0 <= b < self.bag_count):
                raise StructuralError(f"tree edge {(a, b)} is not between two bags")
        if not nx.is_tree(self.tree):
            raise StructuralError("tree edges do not form a tree")


@dataclass
class ValidationReport:
    uncovered_edges: list[tuple[int, int]] = field(default_factory=list)
    missing_vertices: list[int] = field(default_factory=list)
    disconnected_vertices: list[int] = field(default_factory=list)
    foreign_vertices: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.uncovered_edges
            or self.missing_vertices
            or self.disconnected_vertices
            or self.foreign_vertices
        )

    def violations(self) -> list[str]:
        out = [f"edge ({u},{v}) not covered by any bag" for u, v in self.uncovered_edges]
        out += [f"vertex {v} appears in no bag" for v in self.missing_vertices]
        out += [
            f"bags containing vertex {v} are not connected in the tree"
            for v in self.disconnected_vertices
        ]
        out += [f"bag vertex {v} is not a vertex of the host" for v in self.foreign_vertices]
        return out


def validate(td: TreeDecomposition, g: Graph) -> ValidationReport:
    """Check both decomposition axioms of ``td`` against ``g``."""
    td.check_structure()
    report = ValidationReport()

    occurrences: dict[int, list[int]] = {v: [] for v in g.vertices}
    foreign: set[int] = set()
    for x, bag in enumerate(td.bags):
        for v in bag:
            if v in occurrences:
                occurrences[v].append(x)
            else:
                foreign.add(v)
    report.foreign_vertices = sorted(foreign)

    for u, v in sorted(g.edges):
        if not set(occurrences[u]).intersection(occurrences[v]):
            report.uncovered_edges.append((u, v))

    for v in g.vertices:
        nodes = occurrences[v]
        if not nodes:
            report.missing_vertices.append(v)
        elif len(nodes) > 1 and not nx.is_connected(td.tree.subgraph(nodes)):
            report.disconnected_vertices.append(v)

    if not report.ok:
        logger.debug(f"Decomposition invalid: {report.violations()[:5]}")
    return report


def width(td: TreeDecomposition) -> int:
    """Largest bag size minus one."""
    if td.bag_count == 0:
        raise InvalidInputError("width of a decomposition with no bags")
    return max(len(b) for b in td.bags) - 1


def normalize(td: TreeDecomposition) -> TreeDecomposition:
    """Merge every bag into an adjacent bag that contains it.

    The result is valid whenever ``td`` is and has the same width. Among
    candidate merges the smallest ``(child, parent)`` pair goes first.
    """
    td.check_structure()
    bags = {x: b for x, b in enumerate(td.bags)}
    adj: dict[int, set[int]] = {x: set() for x in bags}
    for a, b in td.tree_edges:
        adj[a].add(b)
        adj[b].add(a)

    merged = True
    while merged and len(bags) > 1:
        merged = False
        for a in sorted(bags):
            target = next((b for b in sorted(adj[a]) if bags[a] <= bags[b]), None)
            if target is None:
                continue
            for c in adj.pop(a):
                adj[c].discard(a)
                if c != target:
                    adj[c].add(target)
                    adj[target].add(c)
            del bags[a]
            merged = True
            break

    order = sorted(bags)
    index = {x: i for i, x in enumerate(order)}
    edges = {(index[a], index[b]) for a in order for b in adj[a] if a < b}
    return TreeDecomposition.build([bags[x] for x in order], edges)
