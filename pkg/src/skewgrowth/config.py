from __future__ import annotations

from dataclasses import dataclass

DEFAULT_DEGREE_CAP = 16
DEFAULT_BUDGET = 10**6
DEFAULT_NODE_BUDGET = 4_000_000


class CapExceeded(ValueError):
    """A word or degree bound larger than the configured cap was requested."""


class BudgetExceeded(RuntimeError):
    """A combinatorial or memory budget ran out; results would be incomplete."""


@dataclass(frozen=True)
class Limits:
    degree_cap: int = DEFAULT_DEGREE_CAP
    # expanded subsets during tower search
    budget: int = DEFAULT_BUDGET
    # (letter, element) nodes per stratum during enumeration
    node_budget: int = DEFAULT_NODE_BUDGET

    def check_degree(self, d: int) -> None:
        if d < 0:
            raise ValueError(f"negative degree {d}")
        if d > self.degree_cap:
            raise CapExceeded(f"degree {d} exceeds the configured cap {self.degree_cap}")


DEFAULT_LIMITS = Limits()
