"""Bounds reports: one row per instance, every number tagged with its
provenance."""

from __future__ import annotations

from pydantic import BaseModel, Field

from graphs.exceptions import InvariantViolation
from utils.logging import get_logger
from utils.provenance import Bound, Provenance

logger = get_logger(__name__)


class ReportedBound(BaseModel):
    value: int
    provenance: Provenance

    @classmethod
    def of(cls, bound: Bound | None) -> "ReportedBound | None":
        return None if bound is None else cls(value=bound.value, provenance=bound.provenance)

    def __str__(self) -> str:
        return f"{max(self.value, 0)} ({self.provenance.value})"


class BoundsReport(BaseModel):
    instance: str
    n: int | None = None
    k: int | None = None
    kappa_g: int | None = None
    kappa_h: int | None = None
    theorem_lower: ReportedBound | None = None
    certified_lower: ReportedBound | None = None
    heuristic_upper: ReportedBound | None = None
    lift_upper: ReportedBound | None = None
    ordering_upper: ReportedBound | None = None
    exact: ReportedBound | None = None
    status: str = "ok"
    error: str | None = None
    notes: list[str] = Field(default_factory=list)

    @property
    def lower(self) -> int | None:
        """Best lower bound that actually holds; vacuous values are skipped."""
        values = [
            b.value
            for b in (self.theorem_lower, self.certified_lower)
            if b is not None and b.provenance is not Provenance.VACUOUS
        ]
        return max(values, default=None)

    @property
    def upper(self) -> int | None:
        values = [
            b.value
            for b in (self.heuristic_upper, self.lift_upper, self.ordering_upper)
            if b is not None
        ]
        return min(values, default=None)

    def check(self) -> None:
        """lower <= exact <= upper whenever present. A violation is a
        library bug, never a property of the input."""
        lower, upper = self.lower, self.upper
        exact = self.exact.value if self.exact is not None else None
        chain = [x for x in (lower, exact, upper) if x is not None]
        if chain != sorted(chain):
            logger.error(
                f"Bounds out of order on {self.instance}: "
                f"lower={lower}, exact={exact}, upper={upper}"
            )
            raise InvariantViolation(
                f"{self.instance}: lower={lower}, exact={exact}, upper={upper} out of order"
            )

    @classmethod
    def failed(cls, instance: str, error: Exception, **fields) -> "BoundsReport":
        return cls(instance=instance, status="failed", error=str(error), **fields)

    def as_record(self) -> dict:
        """Flat record for tables: values plus one provenance column each."""
        record: dict = {
            "instance": self.instance,
            "n": self.n,
            "k": self.k,
            "kappa_g": self.kappa_g,
            "kappa_h": self.kappa_h,
        }
        for name in (
            "theorem_lower",
            "certified_lower",
            "heuristic_upper",
            "lift_upper",
            "ordering_upper",
            "exact",
        ):
            bound = getattr(self, name)
            record[name] = bound.value if bound is not None else None
            record[f"{name}_provenance"] = bound.provenance.value if bound is not None else None
        record["status"] = self.status
        record["error"] = self.error
        return record
