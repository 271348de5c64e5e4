"""Resource limits shared by the exact solvers."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from graphs.exceptions import ResourceLimitError


@dataclass
class Budget:
    """Wall-clock and work limits for one solver run.

    ``time_ms`` and ``max_nodes`` are both optional; ``None`` means unlimited.
    Call :meth:`start` before the search and :meth:`tick` once per unit of
    work (a DP state, a branch node).
    """

    time_ms: int | None = None
    max_nodes: int | None = None
    nodes: int = field(default=0, init=False)
    _deadline: float | None = field(default=None, init=False, repr=False)

    def start(self) -> "Budget":
        self.nodes = 0
        self._deadline = (
            time.monotonic() + self.time_ms / 1000.0 if self.time_ms is not None else None
        )
        return self

    def exhausted(self) -> bool:
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return True
        # clock reads are not free; sample every 256 nodes
        if self._deadline is not None and self.nodes % 256 == 0:
            return time.monotonic() > self._deadline
        return False

    def tick(self, what: str = "search") -> None:
        """Count one unit of work, raising once the budget is spent."""
        self.nodes += 1
        if self.exhausted():
            raise ResourceLimitError(
                f"{what} budget exhausted after {self.nodes} nodes "
                f"(time_ms={self.time_ms}, max_nodes={self.max_nodes})"
            )

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls()
