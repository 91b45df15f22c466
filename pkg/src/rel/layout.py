from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, Tuple, Union

from ..core.errors import InvalidLayout

Number = Union[int, Fraction, str]


def frac(v: Number) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class Rect:
    x: Fraction
    y: Fraction
    w: Fraction
    h: Fraction

    @classmethod
    def of(cls, x: Number, y: Number, w: Number, h: Number) -> "Rect":
        return cls(frac(x), frac(y), frac(w), frac(h))

    @property
    def right(self) -> Fraction:
        return self.x + self.w

    @property
    def top(self) -> Fraction:
        return self.y + self.h

    @property
    def area(self) -> Fraction:
        return self.w * self.h

    @property
    def perimeter(self) -> Fraction:
        return 2 * (self.w + self.h)


@dataclass(frozen=True)
class Layout:
    """rectangles with exact coordinates inside [0, width] x [0, height]"""

    width: Fraction
    height: Fraction
    rects: Tuple[Tuple[str, Rect], ...]

    @classmethod
    def build(cls, width: Number, height: Number, rects: Mapping[str, Rect]) -> "Layout":
        return cls(frac(width), frac(height), tuple(sorted(rects.items())))

    @property
    def bbox(self) -> Tuple[Fraction, Fraction]:
        return (self.width, self.height)

    @cached_property
    def by_id(self) -> Dict[str, Rect]:
        return dict(self.rects)

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(r for r, _ in self.rects)

    def __getitem__(self, rid: str) -> Rect:
        return self.by_id[rid]

    def __len__(self) -> int:
        return len(self.rects)


def four_way_points(l: Layout) -> List[Tuple[Fraction, Fraction]]:
    corners: Counter = Counter()
    for _, r in l.rects:
        for p in ((r.x, r.y), (r.right, r.y), (r.x, r.top), (r.right, r.top)):
            corners[p] += 1
    return sorted(p for p, n in corners.items() if n >= 4)


def validate_layout(l: Layout) -> Layout:
    if not l.rects:
        raise InvalidLayout("layout has no rectangles")
    if l.width <= 0 or l.height <= 0:
        raise InvalidLayout("bounding box must have positive size")
    for rid, r in l.rects:
        if r.w <= 0 or r.h <= 0:
            raise InvalidLayout(f"rectangle {rid} has non-positive size")
        if r.x < 0 or r.y < 0 or r.right > l.width or r.top > l.height:
            raise InvalidLayout(f"rectangle {rid} leaves the bounding box")
    items = list(l.rects)
    for i, (a, ra) in enumerate(items):
        for b, rb in items[i + 1 :]:
            if ra.x < rb.right and rb.x < ra.right and ra.y < rb.top and rb.y < ra.top:
                raise InvalidLayout(f"rectangles {a} and {b} overlap")
    if sum((r.area for _, r in items), Fraction(0)) != l.width * l.height:
        raise InvalidLayout("rectangles do not cover the bounding box")
    bad = four_way_points(l)
    if bad:
        raise InvalidLayout(f"four rectangles meet at {bad[0]}")
    return l


def transpose(l: Layout) -> Layout:
    """mirror across the line y = x"""
    return Layout.build(l.height, l.width, {rid: Rect(r.y, r.x, r.h, r.w) for rid, r in l.rects})


def rotate_quarter(l: Layout, turns: int = 1) -> Layout:
    """clockwise quarter turns; the left side becomes the top side"""
    out = l
    for _ in range(turns % 4):
        W = out.width
        out = Layout.build(out.height, W, {rid: Rect(r.y, W - r.right, r.h, r.w) for rid, r in out.rects})
    return out


def fit_into(l: Layout, target: Rect) -> Dict[str, Rect]:
    sx = target.w / l.width
    sy = target.h / l.height
    return {rid: Rect(target.x + r.x * sx, target.y + r.y * sy, r.w * sx, r.h * sy) for rid, r in l.rects}


def scale_to(l: Layout, width: Number, height: Number) -> Layout:
    return Layout.build(width, height, fit_into(l, Rect(Fraction(0), Fraction(0), frac(width), frac(height))))
