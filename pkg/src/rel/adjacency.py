from __future__ import annotations

from typing import Dict, List, Tuple

from ..core.errors import AdjacencyMismatch, IdMismatch
from ..core.types import DEFAULT_CORNERS, Corners, Edge, Label, edge_key
from ..graph.model import ExtendedGraph, PlaneTriangulatedGraph
from .labeling import RegularEdgeLabeling
from .layout import Layout
from .segments import segment_table


def _span(l: Layout, rid: str, vertical: bool) -> Tuple:
    r = l[rid]
    return (r.y, r.top) if vertical else (r.x, r.right)


def labeled_adjacencies(l: Layout, corners: Corners = DEFAULT_CORNERS) -> Dict[Edge, Label]:
    """every contact of positive length, colored and oriented, including contacts with the box sides"""
    out: Dict[Edge, Label] = {}
    for seg in segment_table(l).segments:
        vertical = seg.orientation == "vertical"
        color = "blue" if vertical else "red"
        for a in seg.before:
            lo_a, hi_a = _span(l, a, vertical)
            for b in seg.after:
                lo_b, hi_b = _span(l, b, vertical)
                if min(hi_a, hi_b) > max(lo_a, lo_b):
                    out[edge_key(a, b)] = Label(color, a, b)  # type: ignore[arg-type]
    for rid, r in l.rects:
        if r.x == 0:
            out[edge_key(corners.left, rid)] = Label("blue", corners.left, rid)
        if r.right == l.width:
            out[edge_key(corners.right, rid)] = Label("blue", rid, corners.right)
        if r.y == 0:
            out[edge_key(corners.bottom, rid)] = Label("red", corners.bottom, rid)
        if r.top == l.height:
            out[edge_key(corners.top, rid)] = Label("red", rid, corners.top)
    return out


def dual_graph(l: Layout, corners: Corners = DEFAULT_CORNERS) -> ExtendedGraph:
    """extended dual read off the geometry; rotations run clockwise around each rectangle"""
    adj = labeled_adjacencies(l, corners)
    rect = l.by_id
    sides: Dict[str, Dict[str, List[str]]] = {rid: {"left": [], "top": [], "right": [], "bottom": []} for rid in l.ids}
    for lab in adj.values():
        t, h = lab.tail, lab.head
        if lab.color == "blue":
            if h in sides:
                sides[h]["left"].append(t)
            if t in sides:
                sides[t]["right"].append(h)
        else:
            if h in sides:
                sides[h]["bottom"].append(t)
            if t in sides:
                sides[t]["top"].append(h)

    def pos(v: str, axis: str) -> Tuple:
        # exterior neighbors are the only entry on their side
        if v not in rect:
            return (0,)
        return (rect[v].y,) if axis == "y" else (rect[v].x,)

    rotation: Dict[str, List[str]] = {}
    for rid in l.ids:
        s = sides[rid]
        rotation[rid] = (
            sorted(s["left"], key=lambda v: pos(v, "y"))
            + sorted(s["top"], key=lambda v: pos(v, "x"))
            + sorted(s["right"], key=lambda v: pos(v, "y"), reverse=True)
            + sorted(s["bottom"], key=lambda v: pos(v, "x"), reverse=True)
        )
    left_arc = sorted((rid for rid, r in l.rects if r.x == 0), key=lambda v: rect[v].y)
    top_arc = sorted((rid for rid, r in l.rects if r.top == l.height), key=lambda v: rect[v].x)
    right_arc = sorted((rid for rid, r in l.rects if r.right == l.width), key=lambda v: rect[v].y, reverse=True)
    bottom_arc = sorted((rid for rid, r in l.rects if r.y == 0), key=lambda v: rect[v].x, reverse=True)
    c = corners
    rotation[c.left] = [c.top] + left_arc[::-1] + [c.bottom]
    rotation[c.top] = [c.right] + top_arc[::-1] + [c.left]
    rotation[c.right] = [c.bottom] + right_arc[::-1] + [c.top]
    rotation[c.bottom] = [c.left] + bottom_arc[::-1] + [c.right]
    graph = PlaneTriangulatedGraph.build(rotation, c.as_tuple(), tuple(l.ids) + c.as_tuple())
    return ExtendedGraph(graph=graph, corners=corners)


def rel_from_layout(l: Layout, host: ExtendedGraph) -> RegularEdgeLabeling:
    if set(l.ids) != set(host.inner_vertices):
        raise IdMismatch(set(l.ids), set(host.inner_vertices))
    labels = labeled_adjacencies(l, host.corners)
    expected = set(host.inner_edges)
    got = set(labels)
    if got != expected:
        raise AdjacencyMismatch(missing=sorted(expected - got), extra=sorted(got - expected))
    return RegularEdgeLabeling(host, labels)
