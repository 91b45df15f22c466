from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import networkx as nx

from ..core.errors import NotComparable
from .equivalence import order_equivalent
from .layout import Layout
from .segments import segment_table


@dataclass(frozen=True)
class PushGraph:
    graph: nx.DiGraph

    def has_source_or_sink(self) -> bool:
        return any(self.graph.in_degree(n) == 0 or self.graph.out_degree(n) == 0 for n in self.graph)

    def sources(self):
        return sorted(n for n in self.graph if self.graph.in_degree(n) == 0)

    def sinks(self):
        return sorted(n for n in self.graph if self.graph.out_degree(n) == 0)


def build_push_graph(l1: Layout, l2: Layout) -> PushGraph:
    """edge a -> b when the segment between adjacent a and b moved towards b in l2"""
    if l1.bbox != l2.bbox:
        raise NotComparable("layouts have different bounding boxes")
    if not order_equivalent(l1, l2):
        raise NotComparable("layouts are not order-equivalent")
    if l1.rects == l2.rects:
        raise NotComparable("layouts are geometrically identical")
    moved: Dict[Tuple, Fraction] = {}
    for seg in segment_table(l2).segments:
        moved[(seg.orientation, frozenset(seg.before), frozenset(seg.after))] = seg.coord
    graph = nx.DiGraph()
    graph.add_nodes_from(l1.ids)
    for seg in segment_table(l1).segments:
        delta = moved[(seg.orientation, frozenset(seg.before), frozenset(seg.after))] - seg.coord
        if delta == 0:
            continue
        vertical = seg.orientation == "vertical"
        for a in seg.before:
            ra = l1[a]
            lo_a, hi_a = (ra.y, ra.top) if vertical else (ra.x, ra.right)
            for b in seg.after:
                rb = l1[b]
                lo_b, hi_b = (rb.y, rb.top) if vertical else (rb.x, rb.right)
                if min(hi_a, hi_b) <= max(lo_a, lo_b):
                    continue
                if delta > 0:
                    graph.add_edge(a, b)
                else:
                    graph.add_edge(b, a)
    return PushGraph(graph)


def dominating_rectangle(l1: Layout, l2: Layout) -> Optional[Tuple[str, Layout]]:
    """a rectangle at least as wide and tall in one layout as in the other, and larger in one dimension"""
    for rid in sorted(l1.ids):
        a, b = l1[rid], l2[rid]
        if a.w >= b.w and a.h >= b.h and (a.w > b.w or a.h > b.h):
            return rid, l1
        if b.w >= a.w and b.h >= a.h and (b.w > a.w or b.h > a.h):
            return rid, l2
    return None
