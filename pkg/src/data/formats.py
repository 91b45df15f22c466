"""JSON files for graphs, layouts, labelings, weights and trees; exact values travel as "p/q" strings"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Union

from ..cartogram.weights import WeightFunction
from ..core.errors import InvalidGraph, InvalidLayout, InvalidTree, InvalidWeights, LayoutError
from ..core.types import Corners, Label, edge_key
from ..graph.corners import extend
from ..graph.model import ExtendedGraph, PlaneTriangulatedGraph, check_plane_triangulated, validate_plane_triangulated
from ..rel.labeling import RegularEdgeLabeling, validate_rel
from ..rel.layout import Layout, Rect
from ..tree.layout import RootedTree

Number = Union[int, float, str, Fraction]


def fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_number(v: Number) -> Fraction:
    if isinstance(v, bool):
        raise ValueError(f"not a number: {v!r}")
    if isinstance(v, float):
        return Fraction(repr(v))
    return Fraction(v)


def save(path: str, doc: Any) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")


def load(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


# graphs


def graph_to_json(g: PlaneTriangulatedGraph) -> Dict[str, Any]:
    return {
        "vertices": list(g.vertices),
        "rotation": {v: list(nbrs) for v, nbrs in g.rotation},
        "outer_face": list(g.outer_face),
    }


def extended_to_json(e: ExtendedGraph) -> Dict[str, Any]:
    doc = graph_to_json(e.graph)
    c = e.corners
    doc["corners"] = {"left": c.left, "top": c.top, "right": c.right, "bottom": c.bottom}
    return doc


def graph_from_json(doc: Mapping[str, Any]) -> PlaneTriangulatedGraph:
    return validate_plane_triangulated(doc)


def extended_from_json(doc: Mapping[str, Any]) -> ExtendedGraph:
    """either a full extended graph with "corners", or a plain graph plus "arcs" naming the four sides"""
    try:
        raw = doc.get("corners") or {}
        corners = Corners(*(str(raw[s]) for s in ("left", "top", "right", "bottom"))) if raw else None
    except KeyError as exc:
        raise InvalidGraph(f"corners must name left, top, right and bottom: missing {exc}") from exc
    if "arcs" in doc:
        arcs = doc["arcs"]
        if isinstance(arcs, Mapping):
            arcs = [arcs.get(s, []) for s in ("left", "top", "right", "bottom")]
        g = validate_plane_triangulated(doc)
        return extend(g, [[str(v) for v in a] for a in arcs], corners) if corners else extend(g, arcs)
    if corners is None:
        raise InvalidGraph("extended graph needs corners or arcs")
    g = validate_plane_triangulated(doc)
    if not set(corners.as_tuple()) <= set(g.vertices):
        raise InvalidGraph("corner vertices missing from the graph")
    if not tuple(g.outer_face) == corners.as_tuple():
        g = check_plane_triangulated(PlaneTriangulatedGraph.build(dict(g.rotation), corners.as_tuple(), g.vertices))
    return ExtendedGraph(graph=g, corners=corners)


# layouts


def layout_to_json(l: Layout) -> Dict[str, Any]:
    return {
        "bbox": [fmt(l.width), fmt(l.height)],
        "rects": {rid: {"x": fmt(r.x), "y": fmt(r.y), "w": fmt(r.w), "h": fmt(r.h)} for rid, r in l.rects},
    }


def layout_from_json(doc: Mapping[str, Any]) -> Layout:
    try:
        w, h = (parse_number(v) for v in doc["bbox"])
        rects = {str(rid): Rect(*(parse_number(box[k]) for k in "xywh")) for rid, box in dict(doc["rects"]).items()}
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidLayout(f"malformed layout description: {exc}") from exc
    return Layout.build(w, h, rects)


# labelings


def rel_to_json(rel: RegularEdgeLabeling) -> Dict[str, Any]:
    edges: List[Dict[str, str]] = []
    for (u, v), lab in sorted(rel.labels.items()):
        edges.append({"u": u, "v": v, "color": lab.color, "dir": "uv" if lab.tail == u else "vu"})
    return {"edges": edges}


def rel_from_json(doc: Mapping[str, Any], host: ExtendedGraph) -> RegularEdgeLabeling:
    labels = {}
    try:
        for ent in doc["edges"]:
            u, v, color, way = str(ent["u"]), str(ent["v"]), ent["color"], ent["dir"]
            if color not in ("red", "blue") or way not in ("uv", "vu"):
                raise LayoutError(f"bad label on edge {u}-{v}")
            tail, head = (u, v) if way == "uv" else (v, u)
            labels[edge_key(u, v)] = Label(color, tail, head)
    except (KeyError, TypeError) as exc:
        raise LayoutError(f"malformed labeling description: {exc}") from exc
    rel = RegularEdgeLabeling(host, labels)
    check = validate_rel(rel)
    if not check.ok:
        raise LayoutError(f"invalid labeling at {check.vertex}: {check.reason}")
    return rel


# weights


def weights_to_json(w: WeightFunction) -> Dict[str, Any]:
    vals = {rid: fmt(v) if isinstance(v, Fraction) else v for rid, v in w.values.items()}
    return {"weights": vals, "kind": w.kind}


def weights_from_json(doc: Mapping[str, Any]) -> WeightFunction:
    try:
        kind = doc.get("kind", "area")
        raw = dict(doc["weights"])
    except (KeyError, TypeError) as exc:
        raise InvalidWeights(f"malformed weights description: {exc}") from exc
    vals = {}
    for rid, v in raw.items():
        if isinstance(v, str):
            try:
                vals[str(rid)] = Fraction(v)
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidWeights(f"weight of {rid} is not a number: {v!r}") from exc
        else:
            vals[str(rid)] = v
    return WeightFunction.of(vals, kind)


# trees


def tree_to_json(t: RootedTree) -> Dict[str, Any]:
    return {"root": t.root, "children": {v: list(cs) for v, cs in sorted(t.children.items())}}


def tree_from_json(doc: Mapping[str, Any]) -> RootedTree:
    try:
        return RootedTree.of(str(doc["root"]), {str(k): [str(c) for c in v] for k, v in dict(doc["children"]).items()})
    except (KeyError, TypeError) as exc:
        raise InvalidTree(f"malformed tree description: {exc}") from exc
