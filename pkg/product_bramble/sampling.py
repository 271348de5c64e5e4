"""Seeded element samples and full enumeration on tiny products."""

from __future__ import annotations

from enum import Enum
from itertools import combinations

import numpy as np

from bramble.bramble import Bramble
from graphs.core import ProductGraph
from graphs.exceptions import InvalidInputError, ResourceLimitError
from product_bramble.theorem import ElementSpec, check_factors, make_element
from utils.logging import get_logger

logger = get_logger(__name__)


class DeletionPolicy(str, Enum):
    NONE = "none"
    RANDOM = "random"
    ADVERSARIAL = "adversarial"


def _split(p: ProductGraph, s, t, deleted: set[int]) -> tuple[dict, dict]:
    h_del = {v: deleted & p.copy_of_h(v) for v in s}
    g_del = {w: deleted & p.copy_of_g(w) for w in t}
    return (
        {v: vs for v, vs in h_del.items() if vs},
        {w: vs for w, vs in g_del.items() if vs},
    )


def _random_deletions(p: ProductGraph, k: int, s: list[int], t: list[int], rng) -> set[int]:
    """Delete up to ``k - 1`` vertices per chosen copy, never overdrawing the
    budget of another chosen copy."""
    deleted: set[int] = set()
    row_load = {v: 0 for v in s}
    col_load = {w: 0 for w in t}

    def fits(x: int) -> bool:
        v, w = p.pair(x)
        return row_load.get(v, 0) < k - 1 and col_load.get(w, 0) < k - 1

    copies = [("row", v, p.copy_of_h(v)) for v in s] + [("col", w, p.copy_of_g(w)) for w in t]
    for _, _, members in copies:
        want = int(rng.integers(0, k))
        pool = sorted(members - deleted)
        for idx in rng.permutation(len(pool)):
            if want == 0:
                break
            x = pool[int(idx)]
            if fits(x):
                deleted.add(x)
                v, w = p.pair(x)
                if v in row_load:
                    row_load[v] += 1
                if w in col_load:
                    col_load[w] += 1
                want -= 1
    return deleted


def _adversarial_deletions(p: ProductGraph, k: int, s: list[int], t: list[int], rng) -> set[int]:
    """Exactly ``k - 1`` deletions in every chosen copy, all inside S x T:
    row ``i`` loses the columns ``i, i+1, .., i+k-2`` (mod ``2k - 1``) of a
    shuffled T."""
    size = 2 * k - 1
    cols = [t[int(i)] for i in rng.permutation(size)]
    return {
        p.flat(s[i], cols[(i + j) % size]) for i in range(size) for j in range(k - 1)
    }


def sample_elements(
    p: ProductGraph,
    k: int,
    count: int,
    policy: DeletionPolicy | str = DeletionPolicy.NONE,
    seed: int = 0,
) -> list[tuple[ElementSpec, frozenset[int]]]:
    """``count`` random elements; identical output for identical seeds."""
    policy = DeletionPolicy(policy)
    check_factors(p, k)
    if count < 0:
        raise InvalidInputError("count must be non-negative")
    rng = np.random.default_rng(seed)
    size = 2 * k - 1
    out = []
    for _ in range(count):
        s = sorted(int(v) for v in rng.choice(p.g_size, size, replace=False))
        t = sorted(int(w) for w in rng.choice(p.h_size, size, replace=False))
        if policy is DeletionPolicy.NONE:
            deleted: set[int] = set()
        elif policy is DeletionPolicy.RANDOM:
            deleted = _random_deletions(p, k, s, t, rng)
        else:
            deleted = _adversarial_deletions(p, k, s, t, rng)
        h_del, g_del = _split(p, s, t, deleted)
        spec = ElementSpec.build(k, s, t, h_del, g_del)
        out.append((spec, make_element(p, spec)))
    logger.debug(f"Sampled {count} elements with policy {policy.value}, seed {seed}.")
    return out


def _deletion_sets(p: ProductGraph, k: int, s, t, limit: int):
    """Every deletion set inside the chosen copies that respects the budgets.
    Vertices are decided in increasing id order."""
    union = sorted(set().union(*(p.copy_of_h(v) for v in s), *(p.copy_of_g(w) for w in t)))
    s_set, t_set = set(s), set(t)
    row_load = {v: 0 for v in s}
    col_load = {w: 0 for w in t}
    chosen: list[int] = []
    produced = 0

    def extend(i: int):
        nonlocal produced
        if i == len(union):
            produced += 1
            if produced > limit:
                raise ResourceLimitError(f"product bramble has more than {limit} elements")
            yield set(chosen)
            return
        yield from extend(i + 1)
        v, w = p.pair(union[i])
        if (v not in s_set or row_load[v] < k - 1) and (w not in t_set or col_load[w] < k - 1):
            if v in s_set:
                row_load[v] += 1
            if w in t_set:
                col_load[w] += 1
            chosen.append(union[i])
            yield from extend(i + 1)
            chosen.pop()
            if v in s_set:
                row_load[v] -= 1
            if w in t_set:
                col_load[w] -= 1

    yield from extend(0)


def enumerate_family(p: ProductGraph, k: int, limit: int = 5000) -> Bramble:
    """Materialise the whole product bramble. Only feasible on tiny products;
    raises ResourceLimitError once more than ``limit`` recipes are produced."""
    check_factors(p, k)
    size = 2 * k - 1
    elements: list[frozenset[int]] = []
    for s in combinations(range(p.g_size), size):
        for t in combinations(range(p.h_size), size):
            for deleted in _deletion_sets(p, k, s, t, limit - len(elements)):
                h_del, g_del = _split(p, s, t, deleted)
                spec = ElementSpec.build(k, s, t, h_del, g_del)
                elements.append(make_element(p, spec))
    logger.info(f"Product bramble for k={k} has {len(elements)} element recipes.")
    return Bramble.build(p.base, elements)
