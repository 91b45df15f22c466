from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Type

from ..core.errors import BudgetExceeded, NotProper
from ..core.types import DEFAULT_CORNERS, Corners
from ..graph.corners import enumerate_corner_assignments
from ..graph.decompose import decompose_minimal_components
from ..graph.model import PlaneTriangulatedGraph
from ..lattice.poset import build_flip_poset
from ..rel.layout import Layout
from ..rel.realize import layout_from_rel
from .base import ComponentSearch, flippable
from .budget import SearchBudget
from .extreme import ExtremeSetSearch
from .glue import glue_components
from .stretched import StretchedPairSearch

logger = logging.getLogger(__name__)

STRATEGIES: Dict[str, Type[ComponentSearch]] = {
    "extreme-sets": ExtremeSetSearch,
    "stretched-pairs": StretchedPairSearch,
}


def get_strategy(name: str) -> ComponentSearch:
    if name not in STRATEGIES:
        raise ValueError(f"unknown search algorithm {name!r}; choose from {sorted(STRATEGIES)}")
    return STRATEGIES[name]()


@dataclass(frozen=True)
class FindResult:
    exists: bool
    layout: Optional[Layout] = None
    corner_assignment: Optional[int] = None
    components: List[int] = field(default_factory=list)  # inner vertex count per component
    k: int = 0  # most flippable degree-four vertices in one component
    explored: int = 0


def find_one_sided(
    g: PlaneTriangulatedGraph,
    budget: Optional[SearchBudget] = None,
    algorithm: str = "extreme-sets",
    corners: Corners = DEFAULT_CORNERS,
) -> FindResult:
    """first one-sided layout over corner assignments in canonical order"""
    budget = budget or SearchBudget.from_settings()
    strategy = get_strategy(algorithm)
    hosts = enumerate_corner_assignments(g, corners)
    if not hosts:
        raise NotProper("graph has no corner assignment without separating triangles")
    explored = 0
    overrun: Optional[BudgetExceeded] = None
    k = 0
    for index, host in enumerate(hosts):
        meter = budget.meter()
        decomp = decompose_minimal_components(host)
        layouts: Dict[int, Layout] = {}
        try:
            for comp in decomp.components:
                poset = build_flip_poset(comp.graph)
                k = max(k, len(flippable(poset, "vertex")))
                rel = strategy.search(comp.graph, poset, meter)
                if rel is None:
                    logger.debug("assignment %d: component %d has no one-sided labeling", index, comp.index)
                    break
                layouts[comp.index] = layout_from_rel(rel)
        except BudgetExceeded as exc:
            logger.warning("assignment %d: %s", index, exc)
            overrun = exc
            explored += meter.explored
            continue
        explored += meter.explored
        if len(layouts) == len(decomp.components):
            sizes = [len(c.graph.inner_vertices) for c in decomp.components]
            logger.info("one-sided layout found with assignment %d (%s, %d sets)", index, strategy.name, explored)
            return FindResult(True, glue_components(decomp, layouts), index, sizes, k, explored)
    if overrun is not None:
        raise BudgetExceeded(explored, "no assignment succeeded within the caps")
    return FindResult(False, k=k, explored=explored)
