"""layouts as points of their order polytope: one coordinate per maximal segment"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

import numpy as np

from ..core.errors import InvalidLayout
from ..core.types import Orientation
from ..rel.layout import Layout, Rect
from ..rel.segments import HIGH, LOW, segment_table


@dataclass(frozen=True)
class SegmentFrame:
    ids: Tuple[str, ...]
    orientations: Tuple[Orientation, ...]
    # rect -> (left, right, bottom, top) segment index, LOW/HIGH for the box
    sides: Dict[str, Tuple[int, int, int, int]]

    @classmethod
    def of(cls, l: Layout) -> "SegmentFrame":
        table = segment_table(l)
        if len(table.segments) != len(l) - 1:
            raise InvalidLayout(f"{len(l)} rectangles but {len(table.segments)} maximal segments")
        return cls(tuple(l.ids), tuple(s.orientation for s in table.segments), dict(table.sides))

    @property
    def size(self) -> int:
        return len(self.orientations)

    def coords(self, l: Layout, side: float) -> np.ndarray:
        """segment coordinates of an order-equivalent layout, rescaled to a side x side box"""
        c = np.zeros(self.size)
        sx, sy = side / float(l.width), side / float(l.height)
        for rid, (left, right, bottom, top) in self.sides.items():
            r = l[rid]
            if left >= 0:
                c[left] = float(r.x) * sx
            if right >= 0:
                c[right] = float(r.right) * sx
            if bottom >= 0:
                c[bottom] = float(r.y) * sy
            if top >= 0:
                c[top] = float(r.top) * sy
        return c

    def _at(self, c: np.ndarray, idx: int, side: float) -> float:
        if idx == LOW:
            return 0.0
        if idx == HIGH:
            return side
        return float(c[idx])

    def extents(self, c: np.ndarray, side: float) -> Tuple[np.ndarray, np.ndarray]:
        """widths and heights in id order"""
        w = np.empty(len(self.ids))
        h = np.empty(len(self.ids))
        for k, rid in enumerate(self.ids):
            left, right, bottom, top = self.sides[rid]
            w[k] = self._at(c, right, side) - self._at(c, left, side)
            h[k] = self._at(c, top, side) - self._at(c, bottom, side)
        return w, h

    def inside(self, c: np.ndarray, side: float) -> bool:
        w, h = self.extents(c, side)
        return bool(np.all(w > 0) and np.all(h > 0))

    def layout(self, c: np.ndarray, side: float) -> Layout:
        def q(v: float) -> Fraction:
            return Fraction(repr(float(v)))

        s = q(side)
        vals = {LOW: Fraction(0), HIGH: s}
        vals.update({i: q(float(v)) for i, v in enumerate(c)})
        rects = {}
        for rid, (left, right, bottom, top) in self.sides.items():
            rects[rid] = Rect(vals[left], vals[bottom], vals[right] - vals[left], vals[top] - vals[bottom])
        return Layout.build(s, s, rects)
