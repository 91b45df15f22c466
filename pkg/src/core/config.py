from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class SolverSettings:
    tol: float = float(os.environ.get("RECT_LAYOUTS_AREA_TOL", "1e-10"))
    max_iter: int = int(os.environ.get("RECT_LAYOUTS_AREA_MAX_ITER", "500"))
    continuation_steps: int = 16
    min_step: float = 1e-12


@dataclass(frozen=True)
class SearchSettings:
    max_sets: int = int(os.environ.get("RECT_LAYOUTS_MAX_SETS", "100000"))
    max_seconds: float = float(os.environ.get("RECT_LAYOUTS_MAX_SECONDS", "60"))
    enumerate_cap: int = int(os.environ.get("RECT_LAYOUTS_ENUMERATE_CAP", "100000"))


def log_level() -> str:
    return os.environ.get("RECT_LAYOUTS_LOG_LEVEL", "WARNING").upper()
