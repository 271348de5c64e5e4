"""Bramble order by exact minimum hitting set, and the duality lower bound."""

from __future__ import annotations

from dataclasses import dataclass

from bramble.bramble import Bramble, validate_bramble
from graphs.exceptions import InvalidInputError, ResourceLimitError
from utils.budget import Budget
from utils.logging import get_logger
from utils.provenance import Bound, Provenance

logger = get_logger(__name__)


@dataclass(frozen=True)
class HittingSet:
    vertices: frozenset[int]
    certified_minimum: bool
    lower_bound: int
    nodes: int = 0

    @property
    def size(self) -> int:
        return len(self.vertices)


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _packing(masks: list[int]) -> list[int]:
    """Greedy pairwise-disjoint subfamily, smallest elements first."""
    used = 0
    chosen = []
    for i in sorted(range(len(masks)), key=lambda i: (masks[i].bit_count(), i)):
        if masks[i] & used == 0:
            used |= masks[i]
            chosen.append(i)
    return chosen


def disjoint_packing(b: Bramble) -> list[int]:
    """Indices of pairwise disjoint elements; their count bounds the order."""
    return sorted(_packing([_mask(e) for e in b.elements]))


def _greedy(masks: list[int]) -> int:
    chosen = 0
    unhit = list(masks)
    while unhit:
        counts: dict[int, int] = {}
        for m in unhit:
            for v in _bits(m):
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        chosen |= 1 << v
        unhit = [m for m in unhit if not m >> v & 1]
    return chosen


def _key(mask: int) -> tuple[int, tuple[int, ...]]:
    return mask.bit_count(), tuple(_bits(mask))


def bramble_order(b: Bramble, budget: Budget | None = None) -> HittingSet:
    """Exact minimum hitting set by branch and bound.

    Branches on a smallest unhit element, trying its vertices by increasing
    number of unhit elements they meet (ties by id), and prunes with the
    disjoint-packing bound. Among minimum sets the lexicographically least
    sorted id tuple is returned. If the budget runs out the best set found
    is returned uncertified.
    """
    budget = (budget or Budget.unlimited()).start()
    masks = [_mask(e) for e in b.elements]
    if not masks:
        return HittingSet(frozenset(), True, 0)

    root_lb = len(_packing(masks))
    best = _greedy(masks)
    best_key = _key(best)

    def search(chosen: int, unhit: list[int]) -> None:
        nonlocal best, best_key
        budget.tick("hitting set")
        if not unhit:
            key = _key(chosen)
            if key < best_key:
                best, best_key = chosen, key
            return
        if chosen.bit_count() + len(_packing(unhit)) > best_key[0]:
            return
        target = min(unhit, key=lambda m: m.bit_count())
        degree = {v: sum(1 for m in unhit if m >> v & 1) for v in _bits(target)}
        for v in sorted(degree, key=lambda u: (degree[u], u)):
            search(chosen | 1 << v, [m for m in unhit if not m >> v & 1])

    certified = True
    try:
        # the greedy set may be minimum without being lexicographically least
        search(0, masks)
    except ResourceLimitError as exc:
        certified = False
        logger.warning(f"Hitting set search stopped early: {exc}")

    vertices = frozenset(_bits(best))
    lower = len(vertices) if certified else root_lb
    logger.debug(
        f"bramble of {len(masks)} elements: hitting set {len(vertices)}, "
        f"certified={certified}, {budget.nodes} nodes."
    )
    return HittingSet(vertices, certified, lower, budget.nodes)


def lower_bound_from_bramble(b: Bramble, budget: Budget | None = None) -> Bound:
    """Treewidth is at least the order minus one. An uncertified order falls
    back to the proven packing bound and is flagged."""
    report = validate_bramble(b)
    if not report.ok:
        raise InvalidInputError("not a bramble: " + "; ".join(report.violations()))
    hs = bramble_order(b, budget)
    if hs.certified_minimum:
        return Bound(hs.size - 1, Provenance.CERTIFIED)
    return Bound(hs.lower_bound - 1, Provenance.UNCERTIFIED)
