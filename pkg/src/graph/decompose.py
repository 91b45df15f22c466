from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from ..core.types import Corners
from .cycles import FourCycle, nontrivial_four_cycles
from .model import ExtendedGraph, PlaneTriangulatedGraph, check_plane_triangulated

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Component:
    index: int
    graph: ExtendedGraph
    cycle: Optional[FourCycle]  # cycle that cut this component out of its parent
    placeholder: Optional[str]  # vertex standing for this component in the parent
    parent: Optional[int]


@dataclass(frozen=True)
class SeparationDecomposition:
    """components in preorder; leaves carry no nontrivial separating four-cycle"""

    root: ExtendedGraph
    components: Tuple[Component, ...]

    def children(self, index: int) -> List[Component]:
        return [c for c in self.components if c.parent == index]

    def covered(self, index: int) -> Set[str]:
        """inner vertices of a component and of everything nested in it"""
        out = set(self.components[index].graph.inner_vertices)
        for child in self.children(index):
            out |= self.covered(child.index)
        return out

    def stands_for(self) -> Dict[str, Set[str]]:
        """placeholder -> the vertices it replaced, itself included"""
        return {c.placeholder: self.covered(c.index) | {c.placeholder} for c in self.components if c.placeholder is not None}

    def glued_vertices(self) -> Set[str]:
        """inner vertices after substituting every placeholder by its component"""
        out: Set[str] = set()
        holders = {c.placeholder for c in self.components if c.placeholder is not None}
        for c in self.components:
            out.update(v for v in c.graph.inner_vertices if v not in holders)
        return out


@dataclass
class _Node:
    graph: ExtendedGraph
    kids: List[Tuple["_Node", FourCycle, str]] = field(default_factory=list)


def _fresh(taken: Set[str], counter: List[int]) -> str:
    while True:
        counter[0] += 1
        name = f"@{counter[0]}"
        if name not in taken:
            taken.add(name)
            return name


def _inside_block(g: PlaneTriangulatedGraph, v: str, prev: str, nxt: str, inside: frozenset) -> Tuple[str, str, List[str]]:
    """the run of rotation(v) strictly between its two cycle neighbors that holds inside vertices"""
    nbrs = list(g.rot[v])
    i, j = nbrs.index(prev), nbrs.index(nxt)
    d = len(nbrs)
    run = [nbrs[(i + s) % d] for s in range(1, (j - i) % d)]
    if run and all(x in inside for x in run):
        return prev, nxt, run
    run = [nbrs[(j + s) % d] for s in range(1, (i - j) % d)]
    return nxt, prev, run


def split(e: ExtendedGraph, cycle: FourCycle, placeholder: str) -> Tuple[ExtendedGraph, ExtendedGraph]:
    """(inner component, outer component with the inside replaced by placeholder)"""
    g = e.graph
    cyc = cycle.vertices
    inside = cycle.inside
    inner_rot: Dict[str, List[str]] = {v: list(g.rot[v]) for v in g.vertices if v in inside}
    outer_rot: Dict[str, List[str]] = {v: list(g.rot[v]) for v in g.vertices if v not in inside}
    for i, v in enumerate(cyc):
        prev, nxt = cyc[i - 1], cyc[(i + 1) % 4]
        first, last, run = _inside_block(g, v, prev, nxt, inside)
        inner_rot[v] = [first] + run + [last]
        nbrs = list(g.rot[v])
        start = nbrs.index(first)
        rolled = nbrs[start:] + nbrs[:start]
        outer_rot[v] = [first, placeholder] + rolled[len(run) + 1 :]

    inner_order = [v for v in g.vertices if v in inside or v in cyc]
    embedded = PlaneTriangulatedGraph.build(inner_rot, (), inner_order)
    quad = next(f for f in embedded.faces if len(f) == 4 and set(f) == set(cyc))
    start = quad.index(min(quad))
    boundary = quad[start:] + quad[:start]
    inner_graph = check_plane_triangulated(PlaneTriangulatedGraph.build(inner_rot, boundary, inner_order))
    inner = ExtendedGraph(graph=inner_graph, corners=Corners(*boundary))

    outer_rot[placeholder] = list(boundary)
    outer_order = [v for v in g.vertices if v not in inside] + [placeholder]
    outer_graph = check_plane_triangulated(PlaneTriangulatedGraph.build(outer_rot, g.outer_face, outer_order))
    outer = ExtendedGraph(graph=outer_graph, corners=e.corners, assignment=e.assignment)
    return inner, outer


def _pick(e: ExtendedGraph) -> Optional[FourCycle]:
    cycles = nontrivial_four_cycles(e)
    if not cycles:
        return None
    return min(cycles, key=lambda c: (c.inside_count, c.vertices))


def _holder(node: _Node, v: str) -> Optional[_Node]:
    if v in node.graph.inner_vertices:
        return node
    for kid, _, _ in node.kids:
        hit = _holder(kid, v)
        if hit is not None:
            return hit
    return None


def decompose_minimal_components(e: ExtendedGraph) -> SeparationDecomposition:
    taken = set(e.graph.vertices)
    counter = [0]

    def build(g: ExtendedGraph) -> _Node:
        cycle = _pick(g)
        if cycle is None:
            return _Node(g)
        p = _fresh(taken, counter)
        logger.debug("split on %s (%d inside) as %s", cycle.vertices, cycle.inside_count, p)
        inner, outer = split(g, cycle, p)
        child = build(inner)
        top = build(outer)
        holder = _holder(top, p)
        assert holder is not None
        holder.kids.append((child, cycle, p))
        return top

    tree = build(e)
    comps: List[Component] = []

    def flatten(node: _Node, cycle: Optional[FourCycle], p: Optional[str], parent: Optional[int]) -> None:
        idx = len(comps)
        comps.append(Component(index=idx, graph=node.graph, cycle=cycle, placeholder=p, parent=parent))
        for kid, kc, kp in node.kids:
            flatten(kid, kc, kp, idx)

    flatten(tree, None, None, None)
    logger.info("decomposition: %d components", len(comps))
    return SeparationDecomposition(root=e, components=tuple(comps))
