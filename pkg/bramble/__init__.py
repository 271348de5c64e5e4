"""Brambles, their order and the treewidth duality lower bound."""

from bramble.bramble import Bramble, cross_bramble, touch, validate_bramble
from bramble.hitting_set import HittingSet, bramble_order, lower_bound_from_bramble

__all__ = [
    "Bramble",
    "HittingSet",
    "bramble_order",
    "cross_bramble",
    "lower_bound_from_bramble",
    "touch",
    "validate_bramble",
]
