"""small named instances, built from exact layouts so their rotation systems are consistent"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Tuple

from ..rel.adjacency import dual_graph
from ..rel.layout import Layout, Rect, fit_into, four_way_points
from .model import ExtendedGraph, PlaneTriangulatedGraph

BOXES: Dict[str, Tuple[int, int, Dict[str, Tuple[int, int, int, int]]]] = {
    "single": (1, 1, {"A": (0, 0, 1, 1)}),
    "pair": (2, 1, {"A": (0, 0, 1, 1), "B": (1, 0, 1, 1)}),
    "triangle": (2, 2, {"a": (0, 0, 1, 2), "b": (1, 1, 1, 1), "c": (1, 0, 1, 1)}),
    # pinwheel around E; every segment is a full side of an arm
    "windmill": (
        3,
        3,
        {"A": (0, 0, 1, 2), "B": (0, 2, 2, 1), "C": (2, 1, 1, 2), "D": (1, 0, 2, 1), "E": (1, 1, 1, 1)},
    ),
    # the middle vertical segment has two rectangles on each side
    "grid": (4, 4, {"a": (0, 2, 2, 2), "c": (0, 0, 2, 2), "b": (2, 1, 2, 3), "d": (2, 0, 2, 1)}),
    # triangle a, b, c with one ear per triangle edge
    "sun": (
        6,
        6,
        {
            "a": (0, 2, 2, 4),
            "ab": (2, 4, 4, 2),
            "b": (2, 2, 4, 2),
            "bc": (4, 0, 2, 2),
            "c": (1, 0, 3, 2),
            "ca": (0, 0, 1, 2),
        },
    ),
}


def layout(name: str) -> Layout:
    w, h, boxes = BOXES[name]
    return Layout.build(w, h, {rid: Rect.of(*box) for rid, box in boxes.items()})


def extended(name: str) -> ExtendedGraph:
    return dual_graph(layout(name))


def graph(name: str) -> PlaneTriangulatedGraph:
    return extended(name).inner


def k4() -> PlaneTriangulatedGraph:
    """triangle a, b, c with d inside; not proper"""
    rotation = {"a": ["b", "d", "c"], "b": ["c", "d", "a"], "c": ["a", "d", "b"], "d": ["c", "a", "b"]}
    return PlaneTriangulatedGraph.build(rotation, ("a", "b", "c"), ("a", "b", "c", "d"))


def nested_windmill(levels: int) -> Layout:
    """windmill whose center is again a windmill, levels deep"""
    _, _, arms = BOXES["windmill"]
    rects: Dict[str, Rect] = {}
    frame = Rect.of(0, 0, 3, 3)
    for level in range(1, levels + 1):
        unit = Layout.build(3, 3, {f"{k}{level}": Rect.of(*box) for k, box in arms.items()})
        placed = fit_into(unit, frame)
        center = placed.pop(f"E{level}")
        rects.update(placed)
        frame = center
    rects[f"E{levels}"] = frame
    return Layout.build(3, 3, rects)


def random_sliceable_layout(n: int, rng: random.Random, size: int = 1000) -> Layout:
    """n rectangles from random guillotine cuts, free of four-rectangle points"""
    while True:
        rects: List[Rect] = [Rect.of(0, 0, size, size)]
        while len(rects) < n:
            i = rng.randrange(len(rects))
            r = rects[i]
            vertical = rng.random() < 0.5 if r.w > 2 and r.h > 2 else r.w > 2
            if vertical and r.w > 2:
                cut = Fraction(rng.randint(1, int(r.w) - 1))
                rects[i : i + 1] = [Rect(r.x, r.y, cut, r.h), Rect(r.x + cut, r.y, r.w - cut, r.h)]
            elif r.h > 2:
                cut = Fraction(rng.randint(1, int(r.h) - 1))
                rects[i : i + 1] = [Rect(r.x, r.y, r.w, cut), Rect(r.x, r.y + cut, r.w, r.h - cut)]
        out = Layout.build(size, size, {f"r{k}": r for k, r in enumerate(rects)})
        if not four_way_points(out):
            return out


def random_tree(n: int, rng: random.Random) -> Dict[str, List[str]]:
    """children lists of a random rooted tree on t0..t{n-1}, rooted at t0"""
    children: Dict[str, List[str]] = {f"t{i}": [] for i in range(n)}
    for i in range(1, n):
        children[f"t{rng.randrange(i)}"].append(f"t{i}")
    return children
