from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from ..core.config import SearchSettings
from ..core.errors import BudgetExceeded


@dataclass(frozen=True)
class SearchBudget:
    max_sets: int
    max_seconds: float

    @classmethod
    def from_settings(cls, settings: Optional[SearchSettings] = None, max_sets: Optional[int] = None) -> "SearchBudget":
        s = settings or SearchSettings()
        return cls(max_sets=max_sets if max_sets is not None else s.max_sets, max_seconds=s.max_seconds)

    def __post_init__(self) -> None:
        if self.max_sets <= 0 or self.max_seconds <= 0:
            raise ValueError("search caps must be positive")

    def meter(self) -> "BudgetMeter":
        return BudgetMeter(self)


@dataclass
class BudgetMeter:
    """counts candidate sets; raises once a cap is passed"""

    budget: SearchBudget
    explored: int = 0
    started: float = field(default_factory=time.monotonic)

    def tick(self) -> None:
        self.explored += 1
        if self.explored > self.budget.max_sets:
            raise BudgetExceeded(self.explored - 1, "set cap")
        if time.monotonic() - self.started > self.budget.max_seconds:
            raise BudgetExceeded(self.explored, "time cap")
