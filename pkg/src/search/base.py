from __future__ import annotations

from abc import ABC, abstractmethod
from typing import List, Optional

from ..graph.model import ExtendedGraph
from ..lattice.moves import FlippableItem
from ..lattice.poset import FlipPoset
from ..rel.labeling import RegularEdgeLabeling
from .budget import BudgetMeter


class ComponentSearch(ABC):
    """looks for a one-sided labeling of one component, minimal api"""

    def __init__(self, name: str):
        self.name = name

    @abstractmethod
    def search(self, host: ExtendedGraph, poset: FlipPoset, meter: BudgetMeter) -> Optional[RegularEdgeLabeling]:
        raise NotImplementedError


def flippable(poset: FlipPoset, kind: str) -> List[FlippableItem]:
    """items of one kind that move at least once between the minimum and the maximum"""
    return [x for x in poset.items if x.kind == kind and poset.height(x) > 0]
