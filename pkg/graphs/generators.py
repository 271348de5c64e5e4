"""Graph families used as factors and test inputs."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from graphs.core import Graph, cartesian_product
from graphs.exceptions import InvalidInputError
from utils.logging import get_logger

logger = get_logger(__name__)


def _require_n(n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"n must be at least 1, got {n}")


def _require_k(n: int, k: int) -> None:
    _require_n(n)
    if not 1 <= k < n:
        raise InvalidInputError(f"need 1 <= k < n, got n={n}, k={k}")


def path(n: int) -> Graph:
    _require_n(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """The n-cycle. For n < 3 this degenerates to a path."""
    _require_n(n)
    if n < 3:
        return path(n)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _require_n(n)
    return Graph.from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _require_n(n)
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def path_power(n: int, k: int) -> Graph:
    """P_n^k: ij is an edge iff 0 < |i - j| <= k."""
    _require_k(n, k)
    return Graph.from_edges(
        n, ((i, j) for i in range(n) for j in range(i + 1, min(n, i + k + 1)))
    )


def grid(n: int) -> Graph:
    """The n x n grid, flattened row-major."""
    _require_n(n)
    return cartesian_product(path(n), path(n)).base


def random_ktree(n: int, k: int, seed: int) -> Graph:
    """A random k-tree on n vertices.

    Starts from a (k+1)-clique and repeatedly joins a new vertex to a k-clique
    chosen uniformly from those created so far. The result is chordal,
    k-connected and has clique number k + 1.
    """
    _require_k(n, k)
    rng = np.random.default_rng(seed)

    edges = set(combinations(range(k + 1), 2))
    cliques: list[tuple[int, ...]] = list(combinations(range(k + 1), k))
    for v in range(k + 1, n):
        base = cliques[int(rng.integers(len(cliques)))]
        edges.update((u, v) for u in base)
        for dropped in base:
            cliques.append(tuple(u for u in base if u != dropped) + (v,))

    logger.debug(f"random_ktree(n={n}, k={k}, seed={seed}) has {len(edges)} edges.")
    return Graph.from_edges(n, edges)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "pathpower": path_power,
    "grid": grid,
    "ktree": random_ktree,
}


def generate(family: str, **params: int) -> Graph:
    """Dispatch to a family by name, e.g. ``generate("pathpower", n=5, k=2)``."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise InvalidInputError(f"unknown graph family '{family}'") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise InvalidInputError(f"bad parameters for '{family}': {exc}") from None
