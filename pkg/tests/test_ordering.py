from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from decomposition.exact import exact_treewidth
from graphs.core import cartesian_product
from graphs.exceptions import InvalidInputError, ResourceLimitError, StructuralError
from graphs.generators import complete, cycle, grid, path, path_power, random_ktree, star
from ordering.bandwidth import bandwidth_lower_bound, exact_bandwidth
from ordering.orderings import (
    VertexOrdering,
    improved_ordering,
    ordering_width,
    product_ordering,
    row_major_ordering,
)
from utils.budget import Budget


def _brute_bandwidth(g):
    return min(
        ordering_width(g, VertexOrdering.from_sequence(seq))
        for seq in permutations(range(g.vertex_count))
    )


def test_ordering_must_be_a_bijection():
    with pytest.raises(StructuralError):
        VertexOrdering((1, 1, 3))
    with pytest.raises(StructuralError):
        VertexOrdering((0, 1, 2))
    with pytest.raises(StructuralError):
        ordering_width(path(4), VertexOrdering.identity(3))


def test_widths_of_simple_orderings(c4):
    assert ordering_width(path(5), VertexOrdering.identity(5)) == 1
    assert ordering_width(c4, VertexOrdering.identity(4)) == 3
    assert ordering_width(c4, VertexOrdering.from_sequence([0, 1, 3, 2])) == 2


def test_serialisation():
    o = VertexOrdering.from_sequence([2, 0, 1])
    assert o.to_line() == "2 3 1"
    assert VertexOrdering.from_line(o.to_line()) == o
    assert o.sequence() == [2, 0, 1]


@settings(max_examples=50)
@given(st.permutations(list(range(9))))
def test_width_is_invariant_under_reversal(seq):
    o = VertexOrdering.from_sequence(seq)
    g = grid(3)
    assert ordering_width(g, o) == ordering_width(g, o.reverse())


@pytest.mark.parametrize("n", range(2, 13))
def test_row_major_width_is_kn(n):
    for k in range(1, n):
        g = cartesian_product(path_power(n, k), path_power(n, k)).base
        assert ordering_width(g, row_major_ordering(n, k)) == k * n
        assert ordering_width(g, improved_ordering(n, k)) <= k * n


def test_improved_ordering_measured_widths():
    def measure(n, k):
        g = cartesian_product(path_power(n, k), path_power(n, k)).base
        return ordering_width(g, improved_ordering(n, k))

    assert measure(3, 1) <= 3
    assert measure(5, 2) == 10
    assert measure(5, 3) < 15


def test_improved_ordering_keys_are_distinct():
    n = 6
    keys = {x * (n + 1) + y * n for x in range(1, n + 1) for y in range(1, n + 1)}
    assert len(keys) == n * n


def test_orderings_reject_bad_parameters():
    with pytest.raises(InvalidInputError):
        row_major_ordering(3, 3)
    with pytest.raises(InvalidInputError):
        improved_ordering(4, 0)


@pytest.mark.parametrize(
    "g, bw",
    [
        (path(6), 1),
        (cycle(6), 2),
        (star(5), 2),
        (complete(5), 4),
        (grid(3), 3),
        (path_power(7, 3), 3),
    ],
)
def test_exact_bandwidth_known_values(g, bw):
    result = exact_bandwidth(g)
    assert result.certified
    assert result.width == bw
    assert ordering_width(g, result.ordering) == bw


def test_exact_bandwidth_matches_brute_force(petersen):
    for g in (cycle(7), star(7), random_ktree(7, 2, seed=4), grid(2)):
        assert exact_bandwidth(g).width == _brute_bandwidth(g)
    assert exact_bandwidth(petersen).width >= bandwidth_lower_bound(petersen)


def test_exact_bandwidth_limits():
    with pytest.raises(ResourceLimitError):
        exact_bandwidth(grid(4))
    result = exact_bandwidth(grid(3), Budget(max_nodes=1))
    assert not result.certified
    assert result.width == ordering_width(grid(3), result.ordering)


def test_treewidth_at_most_bandwidth(petersen):
    for g in (grid(3), cycle(8), petersen, star(6), path_power(9, 2), random_ktree(9, 3, 2)):
        assert exact_treewidth(g).treewidth <= exact_bandwidth(g).width


def test_product_ordering_width():
    p = cartesian_product(cycle(5), cycle(5))
    bw = exact_bandwidth(cycle(5))
    o = product_ordering(p, bw.ordering, bw.ordering)
    assert ordering_width(p.base, o) <= max(bw.width, bw.width * 5)
    assert ordering_width(p.base, o) == 10
