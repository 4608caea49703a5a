"""Resource caps for the exponential-time exact searches.

Every exact oracle takes a SearchLimits; exceeding any cap raises
LimitExceededError rather than silently approximating.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import InvalidArgumentError, LimitExceededError


@dataclass(frozen=True)
class SearchLimits:
    max_n: int = 10
    node_budget: int = 50_000_000
    time_budget_ms: int = 600_000

    def __post_init__(self):
        if self.max_n <= 0 or self.node_budget <= 0 or self.time_budget_ms <= 0:
            raise InvalidArgumentError("all search limits must be positive")

    def check_n(self, n: int) -> None:
        if n > self.max_n:
            raise LimitExceededError(f"instance has {n} vertices, cap is {self.max_n}")


class Budget:
    """Mutable countdown used inside a single search invocation."""

    __slots__ = ("nodes_left", "deadline")

    def __init__(self, limits: SearchLimits):
        self.nodes_left = limits.node_budget
        self.deadline = time.monotonic() + limits.time_budget_ms / 1000.0

    def tick(self, cost: int = 1) -> None:
        self.nodes_left -= cost
        if self.nodes_left <= 0:
            raise LimitExceededError("search node budget exhausted")
        # monotonic() is cheap but not free; only poll occasionally
        if self.nodes_left % 4096 == 0 and time.monotonic() > self.deadline:
            raise LimitExceededError("search time budget exhausted")


BANDWIDTH_LIMITS = SearchLimits(max_n=12)
CCW_LIMITS = SearchLimits(max_n=10)
ORIENTATION_LIMITS = SearchLimits(max_n=16)
UDIM_LIMITS = SearchLimits(max_n=7)
