from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..core.types import Orientation
from .layout import Layout

# pseudo segment indices for the bounding box sides
LOW = -1
HIGH = -2


@dataclass(frozen=True)
class Segment:
    """maximal segment; before = rectangles left of / below it, after = right of / above it"""

    orientation: Orientation
    coord: Fraction
    lo: Fraction
    hi: Fraction
    before: Tuple[str, ...]
    after: Tuple[str, ...]

    @property
    def one_sided(self) -> bool:
        return len(self.before) == 1 or len(self.after) == 1


@dataclass(frozen=True)
class SegmentTable:
    segments: Tuple[Segment, ...]
    # rect -> (left, right, bottom, top) segment index, LOW/HIGH for the box
    sides: Dict[str, Tuple[int, int, int, int]]

    def vertical(self) -> List[int]:
        return [i for i, s in enumerate(self.segments) if s.orientation == "vertical"]

    def horizontal(self) -> List[int]:
        return [i for i, s in enumerate(self.segments) if s.orientation == "horizontal"]


def _merge(orientation: Orientation, coord: Fraction, entries: List[Tuple[Fraction, Fraction, str, bool]]) -> List[Tuple[Segment, List[Tuple[str, bool]]]]:
    entries.sort(key=lambda t: (t[0], t[1], t[2]))
    groups: List[List[Tuple[Fraction, Fraction, str, bool]]] = []
    hi = Fraction(0)
    for ent in entries:
        # touching intervals on one line belong to the same segment
        if groups and ent[0] <= hi:
            groups[-1].append(ent)
            hi = max(hi, ent[1])
        else:
            groups.append([ent])
            hi = ent[1]
    out: List[Tuple[Segment, List[Tuple[str, bool]]]] = []
    for group in groups:
        before = tuple(r for _, _, r, is_before in group if is_before)
        after = tuple(r for _, _, r, is_before in group if not is_before)
        seg = Segment(orientation, coord, group[0][0], max(g[1] for g in group), before, after)
        out.append((seg, [(r, b) for _, _, r, b in group]))
    return out


def segment_table(l: Layout) -> SegmentTable:
    vert: Dict[Fraction, List[Tuple[Fraction, Fraction, str, bool]]] = {}
    horiz: Dict[Fraction, List[Tuple[Fraction, Fraction, str, bool]]] = {}
    for rid, r in l.rects:
        if r.right < l.width:
            vert.setdefault(r.right, []).append((r.y, r.top, rid, True))
        if r.x > 0:
            vert.setdefault(r.x, []).append((r.y, r.top, rid, False))
        if r.top < l.height:
            horiz.setdefault(r.top, []).append((r.x, r.right, rid, True))
        if r.y > 0:
            horiz.setdefault(r.y, []).append((r.x, r.right, rid, False))

    segments: List[Segment] = []
    sides: Dict[str, List[int]] = {rid: [LOW, HIGH, LOW, HIGH] for rid in l.ids}
    for orientation, table, slots in (("vertical", vert, (1, 0)), ("horizontal", horiz, (3, 2))):
        for coord in sorted(table):
            for seg, members in _merge(orientation, coord, table[coord]):  # type: ignore[arg-type]
                idx = len(segments)
                segments.append(seg)
                for rid, is_before in members:
                    sides[rid][slots[0] if is_before else slots[1]] = idx
    return SegmentTable(tuple(segments), {k: tuple(v) for k, v in sides.items()})  # type: ignore[misc]


def maximal_segments(l: Layout) -> List[Segment]:
    return list(segment_table(l).segments)


def is_one_sided(l: Layout) -> Tuple[bool, Optional[Segment]]:
    for seg in segment_table(l).segments:
        if not seg.one_sided:
            return False, seg
    return True, None


@dataclass(frozen=True)
class SegmentOrderPair:
    vertical: nx.DiGraph
    horizontal: nx.DiGraph

    def closure(self, orientation: Orientation) -> nx.DiGraph:
        dag = self.vertical if orientation == "vertical" else self.horizontal
        return nx.transitive_closure_dag(dag)

    def is_st_planar(self) -> bool:
        for dag in (self.vertical, self.horizontal):
            if not nx.is_directed_acyclic_graph(dag):
                return False
            sources = [n for n in dag if dag.in_degree(n) == 0]
            sinks = [n for n in dag if dag.out_degree(n) == 0]
            if sources != [LOW] or sinks != [HIGH]:
                return False
        return True


def segment_orders(l: Layout) -> SegmentOrderPair:
    """left side -> right side per rectangle (vertical), bottom -> top (horizontal)"""
    table = segment_table(l)
    vert = nx.DiGraph()
    horiz = nx.DiGraph()
    vert.add_nodes_from([LOW, HIGH] + table.vertical())
    horiz.add_nodes_from([LOW, HIGH] + table.horizontal())
    for rid, (left, right, bottom, top) in table.sides.items():
        vert.add_edge(left, right, rect=rid)
        horiz.add_edge(bottom, top, rect=rid)
    return SegmentOrderPair(vert, horiz)
