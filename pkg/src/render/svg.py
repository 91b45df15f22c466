from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from lxml import etree

from ..rel.layout import Layout
from ..rel.segments import Segment, segment_table

SVG_NS = "http://www.w3.org/2000/svg"


def _q(tag: str) -> str:
    return f"{{{SVG_NS}}}{tag}"


# muted fills, picked per rectangle id
PALETTE = (
    "#7995c4",
    "#e6a37d",
    "#80be8e",
    "#d37a7d",
    "#a195c6",
    "#ae9a88",
    "#e3a8d2",
    "#a9a9a9",
    "#d9cb97",
    "#8bc8da",
)


@dataclass(frozen=True)
class RenderSpec:
    width: int = 480
    height: int = 480
    margin: int = 12
    gap: int = 24  # between layouts drawn side by side
    stroke_width: float = 1.5
    labels: bool = True
    segments: bool = False
    witness_color: str = "#d62728"
    segment_color: str = "#333333"


def fill_for(rid: str) -> str:
    digest = hashlib.sha1(rid.encode("utf-8")).digest()
    return PALETTE[digest[0] % len(PALETTE)]


def _num(v: float) -> str:
    return f"{v:.4f}".rstrip("0").rstrip(".")


def _draw(parent: etree._Element, l: Layout, spec: RenderSpec, ox: float, witness: Optional[Segment]) -> None:
    inner_w = spec.width - 2 * spec.margin
    inner_h = spec.height - 2 * spec.margin
    scale = min(inner_w / float(l.width), inner_h / float(l.height))

    def px(x: Fraction) -> float:
        return ox + spec.margin + float(x) * scale

    def py(y: Fraction) -> float:
        # svg y grows downwards
        return spec.margin + (float(l.height) - float(y)) * scale

    group = etree.SubElement(parent, _q("g"), {"class": "layout"})
    for rid, r in l.rects:
        etree.SubElement(
            group,
            _q("rect"),
            {
                "id": f"rect-{rid}",
                "x": _num(px(r.x)),
                "y": _num(py(r.top)),
                "width": _num(float(r.w) * scale),
                "height": _num(float(r.h) * scale),
                "fill": fill_for(rid),
                "stroke": "#000000",
                "stroke-width": _num(spec.stroke_width),
            },
        )
        if spec.labels:
            text = etree.SubElement(
                group,
                _q("text"),
                {
                    "x": _num(px(r.x + r.w / 2)),
                    "y": _num(py(r.y + r.h / 2)),
                    "text-anchor": "middle",
                    "dominant-baseline": "middle",
                    "font-family": "sans-serif",
                    "font-size": "12",
                },
            )
            text.text = rid
    if not (spec.segments or witness is not None):
        return
    for seg in segment_table(l).segments:
        hit = witness is not None and seg == witness
        if not (spec.segments or hit):
            continue
        if seg.orientation == "vertical":
            x1 = x2 = px(seg.coord)
            y1, y2 = py(seg.lo), py(seg.hi)
        else:
            y1 = y2 = py(seg.coord)
            x1, x2 = px(seg.lo), px(seg.hi)
        etree.SubElement(
            group,
            _q("line"),
            {
                "class": "witness" if hit else "segment",
                "x1": _num(x1),
                "y1": _num(y1),
                "x2": _num(x2),
                "y2": _num(y2),
                "stroke": spec.witness_color if hit else spec.segment_color,
                "stroke-width": _num(spec.stroke_width * (3 if hit else 2)),
            },
        )


def render_svg(
    layouts: Sequence[Layout] | Layout,
    spec: Optional[RenderSpec] = None,
    witnesses: Optional[Sequence[Optional[Segment]]] = None,
) -> str:
    """SVG 1.1 document with the layouts side by side; same input, same bytes"""
    spec = spec or RenderSpec()
    items: List[Layout] = [layouts] if isinstance(layouts, Layout) else list(layouts)
    marks = list(witnesses) if witnesses is not None else [None] * len(items)
    total_w = len(items) * spec.width + max(len(items) - 1, 0) * spec.gap
    root = etree.Element(
        _q("svg"),
        {
            "width": str(total_w),
            "height": str(spec.height),
            "viewBox": f"0 0 {total_w} {spec.height}",
            "version": "1.1",
        },
        nsmap={None: SVG_NS},
    )
    for k, (l, w) in enumerate(zip(items, marks)):
        _draw(root, l, spec, k * (spec.width + spec.gap), w)
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding="UTF-8").decode("utf-8")
