from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Set, Tuple, Union

import networkx as nx

from ..core.types import edge_key
from .model import ExtendedGraph, PlaneTriangulatedGraph, same_cycle


@dataclass(frozen=True)
class FourCycle:
    vertices: Tuple[str, str, str, str]
    inside: FrozenSet[str]

    @property
    def inside_count(self) -> int:
        return len(self.inside)

    @property
    def nontrivial(self) -> bool:
        return self.inside_count > 1


def _plane(g: Union[ExtendedGraph, PlaneTriangulatedGraph]) -> PlaneTriangulatedGraph:
    return g.graph if isinstance(g, ExtendedGraph) else g


def canonical_cycle(cycle: Sequence[str]) -> Tuple[str, ...]:
    """start at the smallest id, then go towards its smaller cycle neighbor"""
    m = len(cycle)
    i = min(range(m), key=lambda j: cycle[j])
    fwd = tuple(cycle[(i + s) % m] for s in range(m))
    back = tuple(cycle[(i - s) % m] for s in range(m))
    return min(fwd, back)


def cycle_sides(g: PlaneTriangulatedGraph, cycle: Sequence[str]) -> Tuple[FrozenSet[str], FrozenSet[str]]:
    """(inside, outside) vertex sets of a simple cycle; the outer face is outside"""
    m = len(cycle)
    cut = {edge_key(cycle[i], cycle[(i + 1) % m]) for i in range(m)}
    faces = g.faces
    uf = nx.utils.UnionFind(range(len(faces)))
    for (u, v), f in g.dart_face.items():
        if edge_key(u, v) not in cut:
            uf.union(f, g.dart_face[(v, u)])
    outer_root = uf[g.outer_index]
    on_cycle = set(cycle)
    inside: Set[str] = set()
    outside: Set[str] = set()
    for i, face in enumerate(faces):
        target = outside if uf[i] == outer_root else inside
        target.update(x for x in face if x not in on_cycle)
    return frozenset(inside), frozenset(outside)


def find_separating_triangles(e: Union[ExtendedGraph, PlaneTriangulatedGraph]) -> List[Tuple[str, str, str]]:
    g = _plane(e)
    facial = {frozenset(f) for f in g.faces if len(f) == 3}
    found: List[Tuple[str, str, str]] = []
    for u, v in g.edges:
        common = set(g.rot[u]) & set(g.rot[v])
        for w in sorted(common):
            if w <= v:
                continue
            tri = (u, v, w)
            if frozenset(tri) in facial:
                continue
            inside, outside = cycle_sides(g, tri)
            if inside and outside:
                found.append(tri)
    return found


def find_separating_four_cycles(e: Union[ExtendedGraph, PlaneTriangulatedGraph]) -> List[FourCycle]:
    """all separating four-cycles, built from pairs of vertices with two or more common neighbors"""
    g = _plane(e)
    vs = sorted(g.vertices)
    seen = set()
    found: List[FourCycle] = []
    for i, a in enumerate(vs):
        na = set(g.rot[a])
        for c in vs[i + 1 :]:
            common = sorted(na & set(g.rot[c]))
            for j, b in enumerate(common):
                for d in common[j + 1 :]:
                    key = canonical_cycle((a, b, c, d))
                    if key in seen:
                        continue
                    seen.add(key)
                    if same_cycle(key, g.outer_face) or same_cycle(tuple(reversed(key)), g.outer_face):
                        continue
                    inside, outside = cycle_sides(g, key)
                    if inside and outside:
                        found.append(FourCycle(vertices=key, inside=inside))  # type: ignore[arg-type]
    found.sort(key=lambda fc: fc.vertices)
    return found


def nontrivial_four_cycles(e: Union[ExtendedGraph, PlaneTriangulatedGraph]) -> List[FourCycle]:
    return [fc for fc in find_separating_four_cycles(e) if fc.nontrivial]
