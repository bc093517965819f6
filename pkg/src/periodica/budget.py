"""Enumeration budgets.

``PERIODICA_BUDGET`` overrides the defaults, either as a bare integer (the
crossing limit for state sums) or as ``key=value`` pairs separated by commas,
e.g. ``max_crossings=26,kh_crossings=10``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Budget:
    max_crossings: int = 24
    kh_crossings: int = 12
    max_states: int = 1 << 24

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"budget {f.name} must be positive")

    @classmethod
    def from_env(cls) -> "Budget":
        raw = os.environ.get("PERIODICA_BUDGET", "").strip()
        budget = cls()
        if not raw:
            return budget
        if raw.isdigit():
            return replace(budget, max_crossings=int(raw))
        names = {f.name for f in fields(cls)}
        changes = {}
        for part in raw.split(","):
            key, _, value = part.partition("=")
            key = key.strip()
            if key not in names:
                raise ValueError(f"unknown budget key {key!r} in PERIODICA_BUDGET")
            changes[key] = int(value)
        return replace(budget, **changes)

    def check_states(self, n_cross: int, what: str = "state sum") -> None:
        if n_cross > self.max_crossings or (1 << n_cross) > self.max_states:
            raise BudgetExceeded(
                f"{what} over {n_cross} crossings exceeds the budget "
                f"({self.max_crossings} crossings, {self.max_states} states)"
            )


def default_budget() -> Budget:
    return Budget.from_env()
