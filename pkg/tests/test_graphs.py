from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from graphs.connectivity import is_connected_subset, is_k_connected, vertex_connectivity
from graphs.core import Graph, cartesian_product, copy_of_g, copy_of_h
from graphs.exceptions import InvalidInputError, VertexIndexError
from graphs.generators import (
    complete,
    cycle,
    generate,
    grid,
    path,
    path_power,
    random_ktree,
    star,
)


def test_from_edges_rejects_loops_and_parallel_edges():
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_edge_outside_range():
    with pytest.raises(VertexIndexError):
        Graph.from_edges(3, [(0, 3)])


def test_product_sizes():
    p = cartesian_product(path(3), path(3))
    assert p.base.vertex_count == 9
    assert p.base.edge_count == 12
    k3 = cartesian_product(complete(3), complete(3))
    assert k3.base.edge_count == 18


def test_product_of_empty_factor_is_rejected():
    with pytest.raises(InvalidInputError):
        cartesian_product(Graph.from_edges(0, []), path(3))


def test_copies_partition_the_product():
    p = cartesian_product(cycle(4), path(3))
    rows = [copy_of_h(p, v) for v in range(4)]
    cols = [copy_of_g(p, w) for w in range(3)]
    assert set().union(*rows) == set(range(12))
    assert set().union(*cols) == set(range(12))
    assert all(len(r & c) == 1 for r in rows for c in cols)
    assert all(is_connected_subset(p.base, r) for r in rows)
    assert all(is_connected_subset(p.base, c) for c in cols)


def test_flat_and_pair():
    p = cartesian_product(path(3), path(4))
    assert p.flat(2, 3) == 11
    assert p.pair(11) == (2, 3)
    with pytest.raises(VertexIndexError):
        p.flat(3, 0)
    with pytest.raises(VertexIndexError):
        p.copy_of_g(4)


def test_product_edges_change_one_coordinate():
    p = cartesian_product(cycle(4), path_power(5, 2))
    for x, y in p.base.edges:
        (v1, w1), (v2, w2) = p.pair(x), p.pair(y)
        assert (v1 == v2 and p.h.has_edge(w1, w2)) or (w1 == w2 and p.g.has_edge(v1, v2))


def test_generators():
    assert cycle(2).edge_count == 1
    assert star(5).degree(0) == 4
    assert path_power(5, 2).edge_count == 7
    assert grid(3).edge_count == 12
    assert generate("pathpower", n=6, k=2) == path_power(6, 2)
    with pytest.raises(InvalidInputError):
        generate("hypercube", n=3)
    with pytest.raises(InvalidInputError):
        path_power(4, 4)


def test_random_ktree_is_deterministic():
    a = random_ktree(9, 3, seed=7)
    assert a == random_ktree(9, 3, seed=7)
    assert a.edge_count == 3 * 4 // 2 + 3 * (9 - 4)
    assert vertex_connectivity(a) == 3


def test_vertex_connectivity_known_values(petersen):
    assert vertex_connectivity(path(5)) == 1
    assert vertex_connectivity(cycle(6)) == 2
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(path_power(7, 3)) == 3
    assert vertex_connectivity(petersen) == 3
    assert vertex_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0


def test_vertex_connectivity_needs_two_vertices():
    with pytest.raises(InvalidInputError):
        vertex_connectivity(path(1))


def test_is_k_connected():
    assert is_k_connected(cycle(5), 2)
    assert not is_k_connected(cycle(5), 3)
    assert not is_k_connected(complete(3), 3)


def _brute_kappa(g: Graph) -> int:
    n = g.vertex_count
    for size in range(n - 1):
        for cut in combinations(range(n), size):
            rest = [v for v in range(n) if v not in cut]
            if not nx.is_connected(g.nx_graph.subgraph(rest)):
                return size
    return n - 1


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph.from_edges(n, chosen)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_vertex_connectivity_matches_brute_force(g):
    assert vertex_connectivity(g) == _brute_kappa(g)


def _swap(p):
    return {p.flat(v, w): w * p.g_size + v for v in range(p.g_size) for w in range(p.h_size)}


@pytest.mark.parametrize("seed", range(12))
def test_product_is_symmetric_under_pair_swap(seed):
    g = random_ktree(4 + seed % 3, 1 + seed % 2, seed)
    h = cycle(3 + seed % 4)
    p, q = cartesian_product(g, h), cartesian_product(h, g)
    assert p.base.relabelled(_swap(p)) == q.base


def test_copies_induce_the_factor_edges(petersen):
    p = cartesian_product(petersen, path_power(6, 2))
    for v in range(p.g_size):
        assert p.base.induced_edge_count(copy_of_h(p, v)) == p.h.edge_count
    for w in range(p.h_size):
        assert p.base.induced_edge_count(copy_of_g(p, w)) == p.g.edge_count


@pytest.mark.parametrize(
    "n, k", [(n, k) for n in range(2, 11) for k in range(1, n)]
)
def test_path_power_connectivity_is_k(n, k):
    assert vertex_connectivity(path_power(n, k)) == k


@pytest.mark.parametrize("n", range(2, 11))
def test_first_path_power_is_the_path(n):
    assert path_power(n, 1) == path(n)
