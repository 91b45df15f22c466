"""one-sided labelings from sets of stretched degree-four pairs that fix every flippable edge"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

from ..graph.model import ExtendedGraph
from ..lattice.moves import FlippableItem, apply_move, flip_counts
from ..lattice.poset import FlipPoset
from ..rel.labeling import RegularEdgeLabeling
from .base import ComponentSearch, flippable
from .budget import BudgetMeter

logger = logging.getLogger(__name__)

Counts = Dict[FlippableItem, int]


@dataclass(frozen=True)
class StretchedPair:
    """(v, w) over degree-four items; None stands for the empty end"""

    v: Optional[FlippableItem]
    w: Optional[FlippableItem]

    def __post_init__(self) -> None:
        if self.v is None and self.w is None:
            raise ValueError("a stretched pair needs at least one vertex")
        if self.v is not None and self.v == self.w:
            raise ValueError("a stretched pair needs two different vertices")

    def __str__(self) -> str:
        return f"({self.v or '-'}, {self.w or '-'})"


def _stretched(poset: FlipPoset, f: Counts, pair: StretchedPair) -> bool:
    v, w = pair.v, pair.w
    if v is None:
        return f.get(w, 0) == 0  # type: ignore[arg-type]
    if w is None:
        return f.get(v, 0) == poset.height(v)
    fv, fw = f.get(v, 0), f.get(w, 0)
    # moving v up needs w to move first
    if poset.has((v, fv)):
        if not (poset.has((w, fw)) and poset.less((w, fw), (v, fv))):
            return False
    # moving w down needs v to move first
    if fw > 0:
        if not (fv > 0 and poset.less((w, fw - 1), (v, fv - 1))):
            return False
    return True


def _fixes(poset: FlipPoset, f: Counts, pair: StretchedPair, e: FlippableItem) -> bool:
    fe = f.get(e, 0)
    if pair.v is None:
        low = fe == 0
    else:
        fv = f.get(pair.v, 0)
        low = fv > 0 and fe > 0 and poset.less((e, fe - 1), (pair.v, fv - 1))
    if not low:
        return False
    if pair.w is None:
        return fe == poset.height(e)
    fw = f.get(pair.w, 0)
    return poset.has((pair.w, fw)) and poset.has((e, fe)) and poset.less((pair.w, fw), (e, fe))


def is_stretched(poset: FlipPoset, rel: RegularEdgeLabeling, pair: StretchedPair) -> bool:
    return _stretched(poset, flip_counts(rel), pair)


def fixes_edge(poset: FlipPoset, rel: RegularEdgeLabeling, pair: StretchedPair, e: FlippableItem) -> bool:
    """e can move neither down (blocked by v) nor up (blocked by w)"""
    return _fixes(poset, flip_counts(rel), pair, e)


def realize_stretched_set(poset: FlipPoset, pairs: Iterable[StretchedPair]) -> Optional[RegularEdgeLabeling]:
    """lowest labeling in which every pair is stretched, or None"""
    pairs = sorted(pairs, key=str)
    rel = poset.minimum
    f: Counts = {x: 0 for x in poset.items}
    while True:
        unmet = next((p for p in pairs if not _stretched(poset, f, p)), None)
        if unmet is None:
            return rel
        v = unmet.v
        if v is None or f[v] == poset.height(v):
            return None
        top = (v, f[v])
        reachable = [top] + [e for e in poset.elements if poset.less(e, top)]
        upper = [e for e in reachable if e[1] >= f[e[0]]]
        step = next(e for e in poset.elements if e in upper and all(b[1] < f[b[0]] for b in poset.below(e)))
        rel = apply_move(rel, step[0], "up")
        f[step[0]] += 1


def candidate_pairs(vertices: Sequence[FlippableItem]) -> List[StretchedPair]:
    ends: List[Optional[FlippableItem]] = list(vertices) + [None]
    return [StretchedPair(v, w) for v in ends for w in ends if v != w]


def search_stretched_pairs(host: ExtendedGraph, poset: FlipPoset, meter: BudgetMeter) -> Optional[RegularEdgeLabeling]:
    edges = flippable(poset, "edge")
    if not edges:
        return poset.minimum
    pairs = candidate_pairs(flippable(poset, "vertex"))
    logger.debug("%d candidate pairs for %d flippable edges", len(pairs), len(edges))
    for size in range(1, min(len(pairs), len(edges)) + 1):
        for group in itertools.combinations(pairs, size):
            meter.tick()
            rel = realize_stretched_set(poset, group)
            if rel is None:
                continue
            f = flip_counts(rel)
            if all(any(_fixes(poset, f, p, e) for p in group) for e in edges):
                return rel
    return None


class StretchedPairSearch(ComponentSearch):
    def __init__(self) -> None:
        super().__init__("stretched-pairs")

    def search(self, host: ExtendedGraph, poset: FlipPoset, meter: BudgetMeter) -> Optional[RegularEdgeLabeling]:
        return search_stretched_pairs(host, poset, meter)
