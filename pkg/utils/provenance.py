"""Bounds tagged with where they came from."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Provenance(str, Enum):
    EXACT = "exact"
    CERTIFIED = "certified"
    HEURISTIC = "heuristic"
    FORMULA = "formula"
    VACUOUS = "vacuous"
    UNCERTIFIED = "uncertified"


@dataclass(frozen=True)
class Bound:
    value: int
    provenance: Provenance

    @property
    def display_value(self) -> int:
        """Lower bounds below zero say nothing; show them as 0."""
        return max(self.value, 0)

    def __str__(self) -> str:
        return f"{self.value} ({self.provenance.value})"
