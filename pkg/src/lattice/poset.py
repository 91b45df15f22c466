"""flip poset: the distributive lattice of labelings as down-sets of counted flips"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx

from ..core.errors import IllegalMove, NotDownwardClosed
from ..graph.model import ExtendedGraph
from ..rel.labeling import RegularEdgeLabeling, initial_rel
from .moves import FlippableItem, extremal_rel, flip_counts, move_context, moves_in

logger = logging.getLogger(__name__)

# (item, k): the k-th move on item along any chain from the minimum
Element = Tuple[FlippableItem, int]


def element_name(e: Element) -> str:
    return f"{e[0].name}#{e[1]}"


@dataclass(frozen=True, eq=False)
class FlipPoset:
    host: ExtendedGraph
    minimum: RegularEdgeLabeling
    maximum: RegularEdgeLabeling
    elements: Tuple[Element, ...]
    # transitively closed; an edge a -> b means a < b
    order: nx.DiGraph = field(repr=False)

    def less(self, a: Element, b: Element) -> bool:
        return self.order.has_edge(a, b)

    def below(self, e: Element) -> Set[Element]:
        return set(self.order.predecessors(e))

    def above(self, e: Element) -> Set[Element]:
        return set(self.order.successors(e))

    def has(self, e: Element) -> bool:
        return e in self.order

    def height(self, item: FlippableItem) -> int:
        """number of moves on item between the minimum and the maximum"""
        return sum(1 for x, _ in self.elements if x == item)

    @cached_property
    def items(self) -> Tuple[FlippableItem, ...]:
        return move_context(self.host).items

    @cached_property
    def covers(self) -> nx.DiGraph:
        return nx.transitive_reduction(self.order)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Partition:
    """a down-set of the flip poset and its complement"""

    lower: FrozenSet[Element]
    upper: FrozenSet[Element]


def _face_items(host: ExtendedGraph, items: Iterable[FlippableItem]) -> List[Set[FlippableItem]]:
    by_edge = {it.ends: it for it in items if it.kind == "edge"}
    by_vertex = {it.ends[0]: it for it in items if it.kind == "vertex"}
    groups = []
    for face in host.graph.inner_faces():
        touching: Set[FlippableItem] = set()
        for i, v in enumerate(face):
            if v in by_vertex:
                touching.add(by_vertex[v])
            w = face[(i + 1) % len(face)]
            key = (v, w) if v < w else (w, v)
            if key in by_edge:
                touching.add(by_edge[key])
        if len(touching) > 1:
            groups.append(touching)
    return groups


def build_flip_poset(host: ExtendedGraph) -> FlipPoset:
    """climb one maximal chain and read the order off the interleaving of flips that share a face"""
    low = extremal_rel(initial_rel(host), "down")
    rel = low
    sequence: List[FlippableItem] = []
    while True:
        moves = moves_in(rel, "up")
        if not moves:
            break
        sequence.append(moves[0].item)
        rel = rel.replaced(dict(moves[0].changes))
    seen: Dict[FlippableItem, int] = {}
    elements: List[Element] = []
    for item in sequence:
        k = seen.get(item, 0)
        elements.append((item, k))
        seen[item] = k + 1

    order = nx.DiGraph()
    order.add_nodes_from(elements)
    for item, n in seen.items():
        for k in range(n - 1):
            order.add_edge((item, k), (item, k + 1))
    for group in _face_items(host, move_context(host).items):
        chain = [e for e in elements if e[0] in group]
        for a, b in zip(chain, chain[1:]):
            if a[0] != b[0]:
                order.add_edge(a, b)
    order = nx.transitive_closure_dag(order)
    logger.info("flip poset: %d elements over %d items", len(elements), len(seen))
    return FlipPoset(host=host, minimum=low, maximum=rel, elements=tuple(elements), order=order)


def partition_from_rel(poset: FlipPoset, rel: RegularEdgeLabeling) -> Partition:
    counts = flip_counts(rel)
    lower = frozenset(e for e in poset.elements if e[1] < counts.get(e[0], 0))
    return Partition(lower=lower, upper=frozenset(poset.elements) - lower)


def check_downset(poset: FlipPoset, lower: Iterable[Element]) -> FrozenSet[Element]:
    lower = frozenset(lower)
    for e in sorted(lower, key=element_name):
        if not poset.has(e):
            raise NotDownwardClosed(element_name(e), "not an element of the poset")
        missing = poset.below(e) - lower
        if missing:
            raise NotDownwardClosed(element_name(e), element_name(min(missing, key=element_name)))
    return lower


def rel_from_partition(poset: FlipPoset, lower: Iterable[Element]) -> RegularEdgeLabeling:
    lower = check_downset(poset, lower)
    target: Dict[FlippableItem, int] = {}
    for item, _ in lower:
        target[item] = target.get(item, 0) + 1
    done: Dict[FlippableItem, int] = {}
    rel = poset.minimum
    remaining = len(lower)
    while remaining:
        step = next((m for m in moves_in(rel, "up") if done.get(m.item, 0) < target.get(m.item, 0)), None)
        if step is None:
            raise IllegalMove("climb stalled before reaching the requested down-set")
        rel = rel.replaced(dict(step.changes))
        done[step.item] = done.get(step.item, 0) + 1
        remaining -= 1
    return rel


def free_items(poset: FlipPoset, rel: RegularEdgeLabeling) -> Set[FlippableItem]:
    """items with a move at rel: a maximal element of the down-set or a minimal one of its complement"""
    part = partition_from_rel(poset, rel)
    counts = {item: 0 for item in poset.items}
    for item, _ in part.lower:
        counts[item] += 1
    out: Set[FlippableItem] = set()
    for item, f in counts.items():
        top = (item, f - 1)
        if f > 0 and not (poset.above(top) & part.lower):
            out.add(item)
        nxt = (item, f)
        if poset.has(nxt) and not (poset.below(nxt) & part.upper):
            out.add(item)
    return out


def count_downsets(poset: FlipPoset) -> int:
    """number of down-sets, which is the number of labelings in the lattice"""
    memo: Dict[FrozenSet[Element], int] = {frozenset(): 1}

    def count(rest: FrozenSet[Element]) -> int:
        if rest in memo:
            return memo[rest]
        m = next(e for e in poset.elements if e in rest and not (poset.below(e) & rest))
        without_up = rest - poset.above(m) - {m}
        total = count(rest - {m}) + count(without_up)
        memo[rest] = total
        return total

    return count(frozenset(poset.elements))
