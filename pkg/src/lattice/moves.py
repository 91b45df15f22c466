from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Literal, Optional, Tuple

from ..core.errors import IllegalMove, NontrivialCycleHost
from ..core.types import Direction, Edge, Label, edge_key
from ..graph.cycles import nontrivial_four_cycles
from ..graph.model import ExtendedGraph
from ..rel.labeling import RegularEdgeLabeling, can_complete, class_at, exterior_label, label_for_class

logger = logging.getLogger(__name__)

ItemKind = Literal["edge", "vertex"]


@dataclass(frozen=True)
class FlippableItem:
    kind: ItemKind
    ends: Tuple[str, ...]

    @property
    def name(self) -> str:
        return "-".join(self.ends)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Move:
    item: FlippableItem
    direction: Direction
    changes: Tuple[Tuple[Edge, Label], ...]


@dataclass(frozen=True)
class MoveContext:
    host: ExtendedGraph
    items: Tuple[FlippableItem, ...]
    # four-cycle around each item, in clockwise order
    cycles: Dict[FlippableItem, Tuple[str, str, str, str]]

    def item_named(self, name: str) -> FlippableItem:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)


@lru_cache(maxsize=64)
def move_context(host: ExtendedGraph) -> MoveContext:
    bad = nontrivial_four_cycles(host)
    if bad:
        raise NontrivialCycleHost(bad[0].vertices)
    g = host.graph
    items: List[FlippableItem] = []
    cycles: Dict[FlippableItem, Tuple[str, str, str, str]] = {}
    for v in host.inner_vertices:
        if g.degree(v) == 4:
            item = FlippableItem("vertex", (v,))
            items.append(item)
            cycles[item] = tuple(g.rot[v])  # type: ignore[assignment]
    for u, w in host.inner_edges:
        if host.is_exterior(u) or host.is_exterior(w) or g.degree(u) == 4 or g.degree(w) == 4:
            continue
        item = FlippableItem("edge", (u, w))
        items.append(item)
        cycles[item] = (u, g.next_cw(w, u), w, g.next_cw(u, w))
    items.sort(key=lambda x: x.name)
    return MoveContext(host=host, items=tuple(items), cycles=cycles)


def _alternates(rel: RegularEdgeLabeling, cycle: Tuple[str, ...]) -> bool:
    colors = []
    for i in range(4):
        lab = rel.labels.get(edge_key(cycle[i], cycle[(i + 1) % 4]))
        if lab is None:
            return False
        colors.append(lab.color)
    return all(colors[i] != colors[(i + 1) % 4] for i in range(4))


def _regular_with(rel: RegularEdgeLabeling, v: str, changes: Dict[Edge, Label]) -> bool:
    classes = []
    for u in rel.host.graph.rot[v]:
        e = edge_key(v, u)
        classes.append(class_at(v, changes.get(e) or rel.labels[e]))
    return can_complete(classes)


def _item_moves(rel: RegularEdgeLabeling, ctx: MoveContext, item: FlippableItem) -> List[Move]:
    if not _alternates(rel, ctx.cycles[item]):
        return []
    host = rel.host
    out: List[Move] = []
    if item.kind == "edge":
        u, w = item.ends
        e = edge_key(u, w)
        old = rel.labels[e]
        color = "red" if old.color == "blue" else "blue"
        for new in (Label(color, u, w), Label(color, w, u)):  # type: ignore[arg-type]
            changes = {e: new}
            if not (_regular_with(rel, u, changes) and _regular_with(rel, w, changes)):
                continue
            shift = (class_at(u, new) - class_at(u, old)) % 4
            if shift in (1, 3):
                out.append(Move(item, "up" if shift == 1 else "down", tuple(changes.items())))
        return out
    (v,) = item.ends
    for delta, direction in ((1, "up"), (-1, "down")):
        changes: Dict[Edge, Label] = {}
        for n in host.graph.rot[v]:
            changes[edge_key(v, n)] = label_for_class(v, n, class_at(v, rel.label(v, n)) + delta)
        fine = True
        for n in host.graph.rot[v]:
            if host.is_exterior(n):
                fine = changes[edge_key(v, n)] == exterior_label(host, n, v)
            else:
                fine = _regular_with(rel, n, changes)
            if not fine:
                break
        if fine:
            out.append(Move(item, direction, tuple(changes.items())))  # type: ignore[arg-type]
    return out


def available_moves(rel: RegularEdgeLabeling) -> List[Move]:
    ctx = move_context(rel.host)
    out: List[Move] = []
    for item in ctx.items:
        out.extend(_item_moves(rel, ctx, item))
    return out


def apply_move(rel: RegularEdgeLabeling, item: FlippableItem, direction: Direction) -> RegularEdgeLabeling:
    ctx = move_context(rel.host)
    if item not in ctx.cycles:
        raise IllegalMove(f"{item} is not a flippable item of this host")
    for move in _item_moves(rel, ctx, item):
        if move.direction == direction:
            return rel.replaced(dict(move.changes))
    raise IllegalMove(f"no {direction} move on {item}")


def moves_in(rel: RegularEdgeLabeling, direction: Direction) -> List[Move]:
    return [m for m in available_moves(rel) if m.direction == direction]


def extremal_rel(rel: RegularEdgeLabeling, direction: Direction = "down") -> RegularEdgeLabeling:
    """keep moving in one direction; "down" reaches the minimum, "up" the maximum"""
    steps = 0
    while True:
        moves = moves_in(rel, direction)
        if not moves:
            logger.debug("extremal (%s) reached after %d moves", direction, steps)
            return rel
        rel = rel.replaced(dict(moves[0].changes))
        steps += 1


def flip_counts(rel: RegularEdgeLabeling) -> Dict[FlippableItem, int]:
    """moves per item on a monotone path from the minimum up to rel"""
    ctx = move_context(rel.host)
    counts = {item: 0 for item in ctx.items}
    while True:
        moves = moves_in(rel, "down")
        if not moves:
            return counts
        counts[moves[0].item] += 1
        rel = rel.replaced(dict(moves[0].changes))
