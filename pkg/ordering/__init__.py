"""Vertex orderings, their width, and exact bandwidth."""

from ordering.bandwidth import BandwidthResult, exact_bandwidth
from ordering.orderings import (
    VertexOrdering,
    improved_ordering,
    ordering_width,
    product_ordering,
    row_major_ordering,
)

__all__ = [
    "BandwidthResult",
    "VertexOrdering",
    "exact_bandwidth",
    "improved_ordering",
    "ordering_width",
    "product_ordering",
    "row_major_ordering",
]
