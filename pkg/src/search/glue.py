from __future__ import annotations

import logging
from typing import Dict, Mapping, Set

from ..core.errors import LayoutError, MissingLeaf
from ..core.types import SIDES, Label
from ..graph.decompose import Component, SeparationDecomposition
from ..rel.adjacency import labeled_adjacencies
from ..rel.layout import Layout, Rect, fit_into, rotate_quarter

logger = logging.getLogger(__name__)


def _side_contacts(outer: Layout, component: Component, placeholder: str) -> Dict[str, str]:
    """side of the placeholder rectangle -> the vertex touching it"""
    out: Dict[str, str] = {}
    for (a, b), lab in labeled_adjacencies(outer, component.graph.corners).items():
        if placeholder not in (a, b):
            continue
        other = b if a == placeholder else a
        out[_side(lab, placeholder)] = other
    return out


def _side(lab: Label, v: str) -> str:
    if lab.color == "blue":
        return "left" if lab.head == v else "right"
    return "bottom" if lab.head == v else "top"


def _oriented(inner: Layout, child: Component, contacts: Mapping[str, str], stands_for: Mapping[str, Set[str]]) -> Layout:
    """inner layout turned so each boundary vertex ends up on its side of the placeholder.

    A later split may have replaced a boundary vertex by another placeholder; that placeholder
    then touches the side instead.
    """
    k = child.graph.corners.as_tuple()
    want = tuple(contacts[s] for s in SIDES)
    for turns in range(4):
        if all(k[(i - turns) % 4] in stands_for.get(want[i], {want[i]}) for i in range(4)):
            return rotate_quarter(inner, turns)
    raise LayoutError(f"placeholder {child.placeholder} touches {want}, component boundary is {k}")


def glue_components(decomp: SeparationDecomposition, layouts: Mapping[int, Layout]) -> Layout:
    """substitute every placeholder rectangle by its component's layout, innermost first"""
    for comp in decomp.components:
        if comp.index not in layouts:
            raise MissingLeaf(comp.index)
    done: Dict[int, Layout] = {}
    stands_for = decomp.stands_for()
    for comp in reversed(decomp.components):
        own = layouts[comp.index]
        rects: Dict[str, Rect] = dict(own.rects)
        for child in decomp.children(comp.index):
            p = child.placeholder
            assert p is not None
            contacts = _side_contacts(own, comp, p)
            placed = fit_into(_oriented(done[child.index], child, contacts, stands_for), rects.pop(p))
            rects.update(placed)
        done[comp.index] = Layout.build(own.width, own.height, rects)
    logger.debug("glued %d components", len(decomp.components))
    return done[decomp.components[0].index]
