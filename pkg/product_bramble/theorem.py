"""The product bramble: bound formula, element recipes and the two lemmas
that make it a bramble (elements are connected, any two elements meet).

An element is built from ``2k - 1`` copies of ``H`` (rows ``v`` in ``S``)
and ``2k - 1`` copies of ``G`` (columns ``w`` in ``T``), minus deleted
vertices, with at most ``k - 1`` deleted vertices in each chosen copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

import networkx as nx

from graphs.connectivity import is_connected_subset, is_k_connected
from graphs.core import ProductGraph
from graphs.exceptions import (
    ElementSpecError,
    InvariantViolation,
    PreconditionError,
)
from utils.logging import get_logger
from utils.provenance import Bound, Provenance

logger = get_logger(__name__)


def theorem_bound(k: int, n: int) -> int:
    """``k (n - 2k + 2) - 1``; negative values are vacuous."""
    return k * (n - 2 * k + 2) - 1


def theorem_lower_bound(k: int, n: int) -> Bound:
    value = theorem_bound(k, n)
    if n <= 2 * k - 2:
        logger.warning(f"n={n} <= 2k-2={2 * k - 2}: the product bound is vacuous.")
        return Bound(value, Provenance.VACUOUS)
    return Bound(value, Provenance.FORMULA)


def check_factors(p: ProductGraph, k: int) -> None:
    """Both factors need at least ``2k - 1`` vertices and must be k-connected."""
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    for name, factor in (("G", p.g), ("H", p.h)):
        if factor.vertex_count < 2 * k - 1:
            raise PreconditionError(
                f"factor {name} has {factor.vertex_count} vertices, needs {2 * k - 1}"
            )
        if not is_k_connected(factor, k):
            raise PreconditionError(f"factor {name} is not {k}-connected")


def _frozen_map(m: Mapping[int, Iterable[int]] | None) -> Mapping[int, frozenset[int]]:
    return MappingProxyType({key: frozenset(vs) for key, vs in sorted((m or {}).items())})


@dataclass(frozen=True, eq=False)
class ElementSpec:
    """Recipe for one element: chosen rows ``s``, chosen columns ``t`` and
    the flat vertices deleted from each chosen copy."""

    k: int
    s: frozenset[int]
    t: frozenset[int]
    h_deletions: Mapping[int, frozenset[int]]
    g_deletions: Mapping[int, frozenset[int]]

    @classmethod
    def build(
        cls,
        k: int,
        s: Iterable[int],
        t: Iterable[int],
        h_deletions: Mapping[int, Iterable[int]] | None = None,
        g_deletions: Mapping[int, Iterable[int]] | None = None,
    ) -> "ElementSpec":
        return cls(
            k, frozenset(s), frozenset(t), _frozen_map(h_deletions), _frozen_map(g_deletions)
        )

    @property
    def deleted(self) -> frozenset[int]:
        out: set[int] = set()
        for vs in self.h_deletions.values():
            out |= vs
        for vs in self.g_deletions.values():
            out |= vs
        return frozenset(out)

    def check(self, p: ProductGraph) -> None:
        """Raise ElementSpecError unless sizes, copy membership and the
        per-copy deletion budgets hold."""
        size = 2 * self.k - 1
        if len(self.s) != size or len(self.t) != size:
            raise ElementSpecError(f"|S| and |T| must both be {size}")
        if any(not 0 <= v < p.g_size for v in self.s):
            raise ElementSpecError("S names a vertex outside G")
        if any(not 0 <= w < p.h_size for w in self.t):
            raise ElementSpecError("T names a vertex outside H")
        for v, vs in self.h_deletions.items():
            if v not in self.s:
                raise ElementSpecError(f"deletions listed for row {v} not in S")
            if not vs <= p.copy_of_h(v):
                raise ElementSpecError(f"deletion outside the copy H_{v}")
        for w, vs in self.g_deletions.items():
            if w not in self.t:
                raise ElementSpecError(f"deletions listed for column {w} not in T")
            if not vs <= p.copy_of_g(w):
                raise ElementSpecError(f"deletion outside the copy G_{w}")
        deleted = self.deleted
        for v in self.s:
            if len(deleted & p.copy_of_h(v)) > self.k - 1:
                raise ElementSpecError(f"more than {self.k - 1} deletions in H_{v}")
        for w in self.t:
            if len(deleted & p.copy_of_g(w)) > self.k - 1:
                raise ElementSpecError(f"more than {self.k - 1} deletions in G_{w}")


def make_element(
    p: ProductGraph, spec: ElementSpec, check_connected: bool = True
) -> frozenset[int]:
    """Union of the chosen copies minus the deletions."""
    spec.check(p)
    check_factors(p, spec.k)
    union: set[int] = set()
    for v in spec.s:
        union |= p.copy_of_h(v)
    for w in spec.t:
        union |= p.copy_of_g(w)
    element = frozenset(union - spec.deleted)
    if check_connected and not is_connected_subset(p.base, element):
        logger.error(f"element for S={sorted(spec.s)}, T={sorted(spec.t)} is disconnected")
        raise InvariantViolation("product bramble element is not connected")
    return element


@dataclass(frozen=True)
class QGraphReport:
    min_degree: int
    connected: bool
    components: int


def q_graph_check(p: ProductGraph, spec: ElementSpec, x: Iterable[int]) -> QGraphReport:
    """The bipartite graph on ``S + T`` with ``vw`` present iff ``(v, w)``
    survives in the element. Minimum degree at least ``k`` forces every
    component C to hold ``k`` or more vertices of each side, so it is
    connected."""
    xs = frozenset(x)
    q = nx.Graph()
    q.add_nodes_from(("s", v) for v in sorted(spec.s))
    q.add_nodes_from(("t", w) for w in sorted(spec.t))
    q.add_edges_from(
        (("s", v), ("t", w))
        for v in sorted(spec.s)
        for w in sorted(spec.t)
        if p.flat(v, w) in xs
    )
    min_degree = min((d for _, d in q.degree()), default=0)
    components = nx.number_connected_components(q)
    return QGraphReport(min_degree, components == 1, components)


def touching_certificate(p: ProductGraph, a: ElementSpec, b: ElementSpec) -> int:
    """A vertex of ``S_a x T_b`` surviving in both elements, least id first.

    ``(v, w)`` lies in ``H_v`` of ``a`` and ``G_w`` of ``b``; each side deletes
    at most ``(2k-1)(k-1)`` of the ``(2k-1)^2`` candidates, so one survives.
    """
    if a.k != b.k:
        raise ElementSpecError("touching needs elements built with the same k")
    deleted = a.deleted | b.deleted
    for x in sorted(p.flat(v, w) for v in a.s for w in b.t):
        if x not in deleted:
            return x
    logger.error(f"no common vertex in S_a x T_b for k={a.k}")
    raise InvariantViolation("two product bramble elements do not meet")
