"""one-sided labelings from small sets of degree-four flips"""

from __future__ import annotations

import itertools
import logging
from typing import FrozenSet, Iterator, List, Optional, Set

from ..graph.model import ExtendedGraph
from ..lattice.poset import Element, FlipPoset, rel_from_partition
from ..rel.labeling import RegularEdgeLabeling
from .base import ComponentSearch, flippable
from .budget import BudgetMeter

logger = logging.getLogger(__name__)


def down_closure(poset: FlipPoset, chosen: Set[Element]) -> FrozenSet[Element]:
    out = set(chosen)
    for e in chosen:
        out |= poset.below(e)
    return frozenset(out)


def up_closure(poset: FlipPoset, chosen: Set[Element]) -> FrozenSet[Element]:
    out = set(chosen)
    for e in chosen:
        out |= poset.above(e)
    return frozenset(out)


def minima(poset: FlipPoset, part: FrozenSet[Element]) -> List[Element]:
    return [e for e in poset.elements if e in part and not (poset.below(e) & part)]


def maxima(poset: FlipPoset, part: FrozenSet[Element]) -> List[Element]:
    return [e for e in poset.elements if e in part and not (poset.above(e) & part)]


def _vertex_only(elements: List[Element]) -> bool:
    return all(x.kind == "vertex" for x, _ in elements)


def candidate_sets(poset: FlipPoset) -> Iterator[Set[Element]]:
    """sets of at most k/2 elements on distinct degree-four vertices, smallest first"""
    vertices = flippable(poset, "vertex")
    k = len(vertices)
    for size in range(k // 2 + 1):
        for group in itertools.combinations(vertices, size):
            ranges = [range(poset.height(x)) for x in group]
            for idx in itertools.product(*ranges):
                yield {(x, i) for x, i in zip(group, idx)}


def search_extreme_sets(host: ExtendedGraph, poset: FlipPoset, meter: BudgetMeter) -> Optional[RegularEdgeLabeling]:
    everything = frozenset(poset.elements)
    for chosen in candidate_sets(poset):
        meter.tick()
        lower = down_closure(poset, chosen)
        if _vertex_only(minima(poset, everything - lower)):
            logger.debug("extreme set %d accepted from below", meter.explored)
            return rel_from_partition(poset, lower)
        upper = up_closure(poset, chosen)
        if _vertex_only(maxima(poset, everything - upper)):
            logger.debug("extreme set %d accepted from above", meter.explored)
            return rel_from_partition(poset, everything - upper)
    return None


class ExtremeSetSearch(ComponentSearch):
    def __init__(self) -> None:
        super().__init__("extreme-sets")

    def search(self, host: ExtendedGraph, poset: FlipPoset, meter: BudgetMeter) -> Optional[RegularEdgeLabeling]:
        return search_extreme_sets(host, poset, meter)
