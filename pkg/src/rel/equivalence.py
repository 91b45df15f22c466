from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Hashable, List, Optional, Set, Tuple

import networkx as nx

from ..core.errors import IdMismatch, InvalidLayout
from .adjacency import labeled_adjacencies
from .layout import Layout, Rect, validate_layout
from .segments import HIGH, LOW, Segment, SegmentTable, segment_orders, segment_table

Signature = Tuple[str, Hashable, Hashable]


def _same_ids(l1: Layout, l2: Layout) -> None:
    if set(l1.ids) != set(l2.ids):
        raise IdMismatch(set(l1.ids), set(l2.ids))


def segment_signatures(l: Layout) -> Set[Signature]:
    """segments (and box sides) identified by the rectangles on each side"""
    out: Set[Signature] = set()
    for seg in segment_table(l).segments:
        out.add((seg.orientation, frozenset(seg.before), frozenset(seg.after)))
    out.add(("vertical", "low", frozenset(r for r, b in l.rects if b.x == 0)))
    out.add(("vertical", "high", frozenset(r for r, b in l.rects if b.right == l.width)))
    out.add(("horizontal", "low", frozenset(r for r, b in l.rects if b.y == 0)))
    out.add(("horizontal", "high", frozenset(r for r, b in l.rects if b.top == l.height)))
    return out


def order_equivalent(l1: Layout, l2: Layout) -> bool:
    _same_ids(l1, l2)
    return segment_signatures(l1) == segment_signatures(l2)


def equivalent(l1: Layout, l2: Layout) -> bool:
    _same_ids(l1, l2)
    return labeled_adjacencies(l1) == labeled_adjacencies(l2)


def _order_dag(l: Layout, vertical: bool) -> nx.DiGraph:
    orders = segment_orders(l)
    return nx.DiGraph(orders.vertical if vertical else orders.horizontal)


def _levels(dag: nx.DiGraph, gap: Callable[[Hashable, Hashable], int], length: Fraction) -> Optional[Dict[Hashable, Fraction]]:
    """longest-path positions rescaled so the far box side sits at length; None on a cycle"""
    if not nx.is_directed_acyclic_graph(dag):
        return None
    pos: Dict[Hashable, int] = {}
    for node in nx.topological_sort(dag):
        pos[node] = max((pos[p] + gap(p, node) for p in dag.predecessors(node)), default=0)
    scale = length / pos[HIGH]
    return {n: p * scale for n, p in pos.items()}


def _rebuild(l: Layout, table: SegmentTable, xs: Dict[Hashable, Fraction], ys: Dict[Hashable, Fraction]) -> Layout:
    rects = {}
    for rid, (left, right, bottom, top) in table.sides.items():
        rects[rid] = Rect(xs[left], ys[bottom], xs[right] - xs[left], ys[top] - ys[bottom])
    return Layout.build(l.width, l.height, rects)


def _coords(l: Layout, table: SegmentTable, vertical: bool) -> Dict[Hashable, Fraction]:
    out: Dict[Hashable, Fraction] = {LOW: Fraction(0), HIGH: l.width if vertical else l.height}
    for i, seg in enumerate(table.segments):
        if (seg.orientation == "vertical") == vertical:
            out[i] = seg.coord
    return out


def random_order_equivalent(l: Layout, rng: random.Random, spread: int = 8) -> Layout:
    """random point of the order polytope with the same bounding box"""
    table = segment_table(l)
    xs = _levels(_order_dag(l, True), lambda a, b: rng.randint(1, spread), l.width)
    ys = _levels(_order_dag(l, False), lambda a, b: rng.randint(1, spread), l.height)
    assert xs is not None and ys is not None
    return _rebuild(l, table, xs, ys)


def junctions(table: SegmentTable, index: int) -> List[Tuple[Fraction, int, str]]:
    """perpendicular segments ending in the interior of a segment: (coordinate, index, side)"""
    seg = table.segments[index]
    out: List[Tuple[Fraction, int, str]] = []
    for j, other in enumerate(table.segments):
        if other.orientation == seg.orientation or not (seg.lo < other.coord < seg.hi):
            continue
        if other.lo == seg.coord:
            out.append((other.coord, j, "after"))
        elif other.hi == seg.coord:
            out.append((other.coord, j, "before"))
    out.sort()
    return out


def inequivalent_variant(l: Layout, witness: Optional[Segment] = None) -> Optional[Layout]:
    """order-equivalent layout with two junctions on a non-one-sided segment swapped"""
    table = segment_table(l)
    candidates = [i for i, s in enumerate(table.segments) if not s.one_sided]
    if witness is not None:
        candidates = [i for i in candidates if table.segments[i] == witness]
    for i in candidates:
        seg = table.segments[i]
        vertical = seg.orientation == "horizontal"  # junctions on a horizontal segment are vertical
        marks = junctions(table, i)
        for (c1, j1, side1), (c2, j2, side2) in zip(marks, marks[1:]):
            if side1 == side2:
                continue
            dag = _order_dag(l, vertical)
            dag.add_edge(j2, j1)
            moved = _levels(dag, lambda a, b: 1, l.width if vertical else l.height)
            if moved is None:
                continue
            kept = _coords(l, table, not vertical)
            try:
                out = _rebuild(l, table, moved, kept) if vertical else _rebuild(l, table, kept, moved)
                validate_layout(out)
            except InvalidLayout:
                continue
            if order_equivalent(l, out) and not equivalent(l, out):
                return out
    return None
