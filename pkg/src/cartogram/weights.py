from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Union

from ..core.errors import IdMismatch, InvalidWeights
from ..core.types import WeightKind
from ..rel.layout import Layout

Value = Union[float, Fraction]


@dataclass(frozen=True)
class WeightFunction:
    """positive target per rectangle, read as areas or perimeters"""

    values: Dict[str, Value]
    kind: WeightKind = "area"

    @classmethod
    def of(cls, values: Mapping[str, Value], kind: WeightKind = "area") -> "WeightFunction":
        if kind not in ("area", "perimeter"):
            raise InvalidWeights(f"unknown weight kind {kind!r}")
        for rid, v in values.items():
            if isinstance(v, bool) or not isinstance(v, (int, float, Fraction)):
                raise InvalidWeights(f"weight of {rid} is not a number: {v!r}")
            if not math.isfinite(float(v)) or v <= 0:
                raise InvalidWeights(f"weight of {rid} must be finite and positive, got {v}")
        return cls(dict(sorted(values.items())), kind)

    def total(self) -> float:
        return float(sum(float(v) for v in self.values.values()))

    def check_ids(self, l: Layout) -> None:
        if set(self.values) != set(l.ids):
            raise IdMismatch(set(self.values), set(l.ids))

    def __getitem__(self, rid: str) -> Value:
        return self.values[rid]


def weights_of(l: Layout, kind: WeightKind = "area") -> WeightFunction:
    """the weights a layout realizes exactly"""
    if kind == "area":
        return WeightFunction.of({rid: r.area for rid, r in l.rects}, kind)
    return WeightFunction.of({rid: r.perimeter for rid, r in l.rects}, kind)
