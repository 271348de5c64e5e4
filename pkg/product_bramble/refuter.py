"""Refuting candidate hitting sets of the product bramble.

Given ``J``, either some element avoids ``J`` entirely, or one axis has at
least ``n - (2k - 2)`` disjoint copies each holding ``k`` vertices of ``J``,
which forces ``|J| >= k (n - 2k + 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Union

from graphs.core import ProductGraph
from graphs.connectivity import is_connected_subset
from graphs.exceptions import ElementSpecError, InvariantViolation
from product_bramble.theorem import ElementSpec, check_factors, make_element
from utils.logging import get_logger

logger = get_logger(__name__)

Axis = Literal["rows", "columns"]


@dataclass(frozen=True)
class AvoidingElement:
    spec: ElementSpec
    vertices: frozenset[int]
    s0_size: int
    t0_size: int
    kind: Literal["avoiding"] = "avoiding"


@dataclass(frozen=True)
class SizeCertificate:
    axis: Axis
    copies: tuple[int, ...]
    implied_bound: int
    s0_size: int
    t0_size: int
    kind: Literal["size"] = "size"


RefutationOutcome = Union[AvoidingElement, SizeCertificate]


def refute_hitting_set(p: ProductGraph, k: int, j: Iterable[int]) -> RefutationOutcome:
    """Run the counting argument on ``J``.

    Rows (copies ``H_v``) and columns (copies ``G_w``) meeting ``J`` in at
    most ``k - 1`` vertices are light. With ``2k - 1`` light rows and columns
    the least ids are taken and their ``J``-vertices deleted, which yields an
    element disjoint from ``J``. Otherwise the heavy copies of the deficient
    axis are returned.
    """
    check_factors(p, k)
    js = frozenset(j)
    p.base.check_vertices(js)
    size = 2 * k - 1
    n = p.n

    row_hits = [len(js & p.copy_of_h(v)) for v in range(p.g_size)]
    col_hits = [len(js & p.copy_of_g(w)) for w in range(p.h_size)]
    s0 = [v for v, c in enumerate(row_hits) if c <= k - 1]
    t0 = [w for w, c in enumerate(col_hits) if c <= k - 1]

    if len(s0) >= size and len(t0) >= size:
        s, t = s0[:size], t0[:size]
        spec = ElementSpec.build(
            k,
            s,
            t,
            h_deletions={v: js & p.copy_of_h(v) for v in s},
            g_deletions={w: js & p.copy_of_g(w) for w in t},
        )
        element = make_element(p, spec)
        if element & js:
            raise InvariantViolation("refuter element meets the candidate set")
        logger.debug(f"|J|={len(js)} refuted by an element of {len(element)} vertices.")
        return AvoidingElement(spec, element, len(s0), len(t0))

    axis: Axis
    if len(s0) < size:
        axis, hits = "rows", row_hits
    else:
        axis, hits = "columns", col_hits
    copies = tuple(i for i, c in enumerate(hits) if c >= k)
    implied = k * (n - 2 * k + 2)
    if len(copies) < n - (2 * k - 2) or implied > len(js):
        raise InvariantViolation("size certificate does not account for |J|")
    logger.debug(f"|J|={len(js)} certified large by {len(copies)} heavy {axis}.")
    return SizeCertificate(axis, copies, implied, len(s0), len(t0))


def check_outcome(
    p: ProductGraph, k: int, j: Iterable[int], outcome: RefutationOutcome
) -> list[str]:
    """Independent re-check of an outcome against ``J``; returns problems."""
    js = frozenset(j)
    problems: list[str] = []
    if isinstance(outcome, AvoidingElement):
        if outcome.vertices & js:
            problems.append("element meets J")
        if not is_connected_subset(p.base, outcome.vertices):
            problems.append("element is not connected")
        try:
            outcome.spec.check(p)
        except ElementSpecError as exc:
            problems.append(f"element recipe invalid: {exc}")
        return problems

    copy = p.copy_of_h if outcome.axis == "rows" else p.copy_of_g
    sets = [copy(i) for i in outcome.copies]
    for i, c in zip(outcome.copies, sets):
        if len(c & js) < k:
            problems.append(f"{outcome.axis} copy {i} holds fewer than {k} vertices of J")
    if len(outcome.copies) != len(set(outcome.copies)):
        problems.append("copies repeat")
    if len(outcome.copies) < p.n - (2 * k - 2):
        problems.append("too few heavy copies")
    if outcome.implied_bound > len(js):
        problems.append("implied bound exceeds |J|")
    return problems
