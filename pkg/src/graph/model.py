from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..core.errors import (
    Disconnected,
    InconsistentRotation,
    InvalidGraph,
    NonTriangularFace,
    OuterFaceMismatch,
)
from ..core.types import SIDES, Corners, Edge, Side, edge_key

Dart = Tuple[str, str]


def same_cycle(a: Sequence[str], b: Sequence[str]) -> bool:
    """cyclic equality, orientation sensitive"""
    if len(a) != len(b):
        return False
    if not a:
        return True
    a, b = tuple(a), tuple(b)
    doubled = a + a
    return any(doubled[i : i + len(b)] == b for i in range(len(a)))


def between(cyclic: Sequence[str], start: str, stop: str) -> List[str]:
    """elements strictly after start and strictly before stop, walking forward cyclically"""
    n = len(cyclic)
    i = list(cyclic).index(start)
    out: List[str] = []
    for step in range(1, n + 1):
        x = cyclic[(i + step) % n]
        if x == stop:
            return out
        out.append(x)
    raise KeyError(stop)


@dataclass(frozen=True)
class PlaneTriangulatedGraph:
    """plane graph given by a clockwise rotation system (y axis up).

    Inner faces trace counterclockwise and the outer face traces clockwise when each dart
    u->v is followed by v->w, w the clockwise successor of u around v.
    """

    vertices: Tuple[str, ...]
    rotation: Tuple[Tuple[str, Tuple[str, ...]], ...]
    outer_face: Tuple[str, ...]

    @classmethod
    def build(cls, rotation: Mapping[str, Sequence[str]], outer_face: Sequence[str], vertices: Optional[Sequence[str]] = None) -> "PlaneTriangulatedGraph":
        order = tuple(vertices) if vertices is not None else tuple(rotation)
        return cls(
            vertices=order,
            rotation=tuple((v, tuple(rotation.get(v, ()))) for v in order),
            outer_face=tuple(outer_face),
        )

    @cached_property
    def rot(self) -> Dict[str, Tuple[str, ...]]:
        return dict(self.rotation)

    @cached_property
    def _position(self) -> Dict[str, Dict[str, int]]:
        return {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in self.rotation}

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return self.rot[v]

    def degree(self, v: str) -> int:
        return len(self.rot[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._position.get(u, {})

    def next_cw(self, v: str, u: str) -> str:
        nbrs = self.rot[v]
        return nbrs[(self._position[v][u] + 1) % len(nbrs)]

    def prev_cw(self, v: str, u: str) -> str:
        nbrs = self.rot[v]
        return nbrs[(self._position[v][u] - 1) % len(nbrs)]

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        seen = set()
        for v, nbrs in self.rotation:
            for u in nbrs:
                seen.add(edge_key(u, v))
        return tuple(sorted(seen))

    @cached_property
    def _traced(self) -> Tuple[Tuple[Tuple[str, ...], ...], Dict[Dart, int]]:
        faces: List[Tuple[str, ...]] = []
        dart_face: Dict[Dart, int] = {}
        for v, nbrs in self.rotation:
            for u in nbrs:
                if (v, u) in dart_face:
                    continue
                walk: List[str] = []
                dart = (v, u)
                while dart not in dart_face:
                    dart_face[dart] = len(faces)
                    walk.append(dart[0])
                    a, b = dart
                    dart = (b, self.next_cw(b, a))
                faces.append(tuple(walk))
        if not faces and self.vertices:
            faces.append((self.vertices[0],))
        return tuple(faces), dart_face

    @property
    def faces(self) -> Tuple[Tuple[str, ...], ...]:
        return self._traced[0]

    @property
    def dart_face(self) -> Dict[Dart, int]:
        return self._traced[1]

    @cached_property
    def outer_index(self) -> int:
        for i, face in enumerate(self.faces):
            if same_cycle(face, self.outer_face):
                return i
        raise OuterFaceMismatch(self.outer_face)

    def inner_faces(self) -> List[Tuple[str, ...]]:
        return [f for i, f in enumerate(self.faces) if i != self.outer_index]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def restricted(self, keep: Sequence[str], outer_face: Sequence[str]) -> "PlaneTriangulatedGraph":
        kept = set(keep)
        order = [v for v in self.vertices if v in kept]
        rotation = {v: [u for u in self.rot[v] if u in kept] for v in order}
        return PlaneTriangulatedGraph.build(rotation, outer_face, order)


def check_plane_triangulated(g: PlaneTriangulatedGraph) -> PlaneTriangulatedGraph:
    vset = set(g.vertices)
    if len(vset) != len(g.vertices):
        raise InvalidGraph("duplicate vertex ids")
    if set(g.rot) != vset:
        raise InvalidGraph("rotation keys must match the vertex list")
    for v, nbrs in g.rotation:
        seen = set()
        for u in nbrs:
            if u not in vset:
                raise InvalidGraph(f"unknown vertex {u!r} in rotation of {v!r}")
            if u == v:
                raise InconsistentRotation((v, v), "self-loop")
            if u in seen:
                raise InconsistentRotation((v, u), "parallel edge")
            seen.add(u)
    for v, nbrs in g.rotation:
        for u in nbrs:
            if not g.has_edge(u, v):
                raise InconsistentRotation((v, u))
    if not g.vertices:
        raise InvalidGraph("empty graph")
    nxg = g.to_networkx()
    if not nx.is_connected(nxg):
        reach = nx.node_connected_component(nxg, g.vertices[0])
        raise Disconnected(next(v for v in g.vertices if v not in reach))
    if len(g.vertices) > 1 and len(g.vertices) - len(g.edges) + len(g.faces) != 2:
        raise InvalidGraph("rotation system does not describe a plane embedding")
    outer = g.outer_index
    for i, face in enumerate(g.faces):
        if i != outer and len(face) != 3:
            raise NonTriangularFace(face)
    return g


def validate_plane_triangulated(raw: Mapping[str, Any]) -> PlaneTriangulatedGraph:
    try:
        vertices = [str(v) for v in raw["vertices"]]
        rotation = {str(k): [str(u) for u in nbrs] for k, nbrs in dict(raw["rotation"]).items()}
        outer = [str(v) for v in raw["outer_face"]]
    except (KeyError, TypeError) as exc:
        raise InvalidGraph(f"malformed graph description: {exc}") from exc
    missing = [v for v in vertices if v not in rotation]
    if missing:
        raise InvalidGraph(f"no rotation for {missing}")
    return check_plane_triangulated(PlaneTriangulatedGraph.build(rotation, outer, vertices))


@dataclass(frozen=True)
class ExtendedGraph:
    """plane graph plus four exterior vertices whose outer face is (left, top, right, bottom)"""

    graph: PlaneTriangulatedGraph
    corners: Corners
    assignment: Optional[Tuple[int, int, int, int]] = None

    @cached_property
    def exterior(self) -> frozenset:
        return frozenset(self.corners.as_tuple())

    def is_exterior(self, v: str) -> bool:
        return v in self.exterior

    @cached_property
    def inner_vertices(self) -> Tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if v not in self.exterior)

    @cached_property
    def quad_edges(self) -> frozenset:
        c = self.corners.as_tuple()
        return frozenset(edge_key(c[i], c[(i + 1) % 4]) for i in range(4))

    @cached_property
    def inner_edges(self) -> Tuple[Edge, ...]:
        return tuple(e for e in self.graph.edges if e not in self.quad_edges)

    @cached_property
    def arcs(self) -> Dict[Side, Tuple[str, ...]]:
        """left runs bottom to top, top left to right, right top to bottom, bottom right to left"""
        c = self.corners
        rot = self.graph.rot
        return {
            "left": tuple(reversed(between(rot[c.left], c.top, c.bottom))),
            "top": tuple(reversed(between(rot[c.top], c.right, c.left))),
            "right": tuple(reversed(between(rot[c.right], c.bottom, c.top))),
            "bottom": tuple(reversed(between(rot[c.bottom], c.left, c.right))),
        }

    @cached_property
    def inner(self) -> PlaneTriangulatedGraph:
        keep = self.inner_vertices
        if len(keep) == 1:
            return self.graph.restricted(keep, keep)
        embedded = PlaneTriangulatedGraph.build(
            {v: [u for u in self.graph.rot[v] if not self.is_exterior(u)] for v in keep}, (), keep
        )
        for side in SIDES:
            arc = self.arcs[side]
            if len(arc) > 1:
                face = embedded.faces[embedded.dart_face[(arc[0], arc[1])]]
                return self.graph.restricted(keep, face)
        raise InvalidGraph("extended graph has no boundary edge")
