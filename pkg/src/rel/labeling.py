from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..core.errors import NotProper
from ..core.types import Edge, Label, edge_key
from ..graph.model import ExtendedGraph

logger = logging.getLogger(__name__)

# edge classes around an inner vertex, in clockwise order
IN_BLUE, OUT_RED, OUT_BLUE, IN_RED = 0, 1, 2, 3


def class_at(v: str, label: Label) -> int:
    if label.color == "blue":
        return IN_BLUE if label.head == v else OUT_BLUE
    return OUT_RED if label.tail == v else IN_RED


def label_for_class(v: str, u: str, cls: int) -> Label:
    """label of edge v-u that puts it in class cls at v"""
    cls %= 4
    if cls == IN_BLUE:
        return Label("blue", u, v)
    if cls == OUT_RED:
        return Label("red", v, u)
    if cls == OUT_BLUE:
        return Label("blue", v, u)
    return Label("red", u, v)


def can_complete(classes: Sequence[Optional[int]]) -> bool:
    """can the unset entries be filled so the cyclic sequence reads 0+ 1+ 2+ 3+ up to rotation"""
    d = len(classes)
    idx = [i for i, c in enumerate(classes) if c is not None]
    if not idx:
        return d >= 4
    total = 0
    wide_gap = False
    for t, i in enumerate(idx):
        j = idx[(t + 1) % len(idx)]
        gap = d - 1 if len(idx) == 1 else (j - i - 1) % d
        step = (classes[j] - classes[i]) % 4  # type: ignore[operator]
        if step - 1 > gap:
            return False
        total += step
        if gap >= 3:
            wide_gap = True
    if total == 0:
        return wide_gap
    return total == 4


def exterior_label(host: ExtendedGraph, ext: str, v: str) -> Label:
    c = host.corners
    if ext == c.left:
        return Label("blue", ext, v)
    if ext == c.top:
        return Label("red", v, ext)
    if ext == c.right:
        return Label("blue", v, ext)
    return Label("red", ext, v)


class RegularEdgeLabeling:
    """color and orientation for every inner edge of an extended graph; immutable"""

    def __init__(self, host: ExtendedGraph, labels: Mapping[Edge, Label]):
        self.host = host
        self.labels: Dict[Edge, Label] = dict(labels)

    def label(self, u: str, v: str) -> Label:
        return self.labels[edge_key(u, v)]

    def classes(self, v: str) -> List[int]:
        return [class_at(v, self.label(v, u)) for u in self.host.graph.rot[v]]

    @cached_property
    def encoding(self) -> str:
        parts = []
        for (u, v), lab in sorted(self.labels.items()):
            parts.append(f"{u}|{v}|{lab.color}|{'uv' if lab.tail == u else 'vu'}")
        return ";".join(parts)

    def replaced(self, changes: Mapping[Edge, Label]) -> "RegularEdgeLabeling":
        labels = dict(self.labels)
        labels.update(changes)
        return RegularEdgeLabeling(self.host, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RegularEdgeLabeling):
            return NotImplemented
        return self.host == other.host and self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __repr__(self) -> str:
        return f"RegularEdgeLabeling({len(self.labels)} edges)"


@dataclass(frozen=True)
class RelCheck:
    ok: bool
    vertex: Optional[str] = None
    reason: str = ""


def validate_rel(rel: RegularEdgeLabeling) -> RelCheck:
    host = rel.host
    expected = set(host.inner_edges)
    got = set(rel.labels)
    if got != expected:
        odd = sorted(got ^ expected)
        return RelCheck(False, odd[0][0], f"labels must cover exactly the inner edges; mismatch at {odd[0]}")
    for e, lab in rel.labels.items():
        if {lab.tail, lab.head} != set(e) or lab.color not in ("red", "blue"):
            return RelCheck(False, e[0], f"malformed label on {e}")
    for ext in host.corners.as_tuple():
        for v in host.graph.rot[ext]:
            e = edge_key(ext, v)
            if e in host.quad_edges:
                continue
            if rel.labels[e] != exterior_label(host, ext, v):
                return RelCheck(False, ext, f"exterior rule broken on edge {e}")
    for v in host.inner_vertices:
        if not can_complete(rel.classes(v)):
            return RelCheck(False, v, "edge classes are not four contiguous groups in clockwise order")
    return RelCheck(True)


class _LabelSearch:
    """backtracking over the free edges, most constrained edge first"""

    def __init__(self, host: ExtendedGraph):
        self.host = host
        self.assign: Dict[Edge, Label] = {}
        self.free: List[Edge] = []
        for e in host.inner_edges:
            u, w = e
            if host.is_exterior(u):
                self.assign[e] = exterior_label(host, u, w)
            elif host.is_exterior(w):
                self.assign[e] = exterior_label(host, w, u)
            else:
                self.free.append(e)
        self.ring = {v: [(u, edge_key(v, u)) for u in host.graph.rot[v]] for v in host.inner_vertices}

    def _ok(self, v: str) -> bool:
        classes: List[Optional[int]] = []
        for _, e in self.ring[v]:
            lab = self.assign.get(e)
            classes.append(None if lab is None else class_at(v, lab))
        return can_complete(classes)

    def _viable(self, e: Edge) -> List[Label]:
        u, w = e
        out = []
        for lab in (Label("blue", u, w), Label("blue", w, u), Label("red", u, w), Label("red", w, u)):
            self.assign[e] = lab
            if self._ok(u) and self._ok(w):
                out.append(lab)
        del self.assign[e]
        return out

    def _pick(self) -> Optional[Tuple[Edge, List[Label]]]:
        best: Optional[Tuple[Edge, List[Label]]] = None
        for e in self.free:
            if e in self.assign:
                continue
            opts = self._viable(e)
            if best is None or len(opts) < len(best[1]):
                best = (e, opts)
                if not opts:
                    break
        return best

    def run(self) -> Iterator[RegularEdgeLabeling]:
        if not all(self._ok(v) for v in self.host.inner_vertices):
            return
        first = self._pick()
        if first is None:
            yield RegularEdgeLabeling(self.host, self.assign)
            return
        stack = [(first[0], iter(first[1]))]
        while stack:
            e, opts = stack[-1]
            lab = next(opts, None)
            if lab is None:
                stack.pop()
                self.assign.pop(e, None)
                continue
            self.assign[e] = lab
            nxt = self._pick()
            if nxt is None:
                yield RegularEdgeLabeling(self.host, self.assign)
                continue
            stack.append((nxt[0], iter(nxt[1])))


def iter_rels(host: ExtendedGraph) -> Iterator[RegularEdgeLabeling]:
    """every regular edge labeling of host, by exhaustive search"""
    return _LabelSearch(host).run()


def initial_rel(host: ExtendedGraph) -> RegularEdgeLabeling:
    rel = next(iter_rels(host), None)
    if rel is None:
        raise NotProper("extended graph admits no regular edge labeling")
    logger.debug("initial labeling found for %d inner vertices", len(host.inner_vertices))
    return rel
