from __future__ import annotations

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..core.errors import InvalidGraph
from ..core.types import DEFAULT_CORNERS, Corners
from .cycles import find_separating_triangles
from .model import ExtendedGraph, PlaneTriangulatedGraph

logger = logging.getLogger(__name__)

Cut = Tuple[int, int, int, int]


def _cuts(k: int) -> Iterator[Cut]:
    """(start, a, b, c): left gets boundary darts [start, start+a), top [start+a, start+b),
    right [start+b, start+c), bottom the rest"""
    if k == 0:
        yield (0, 0, 0, 0)
        return
    for p0 in range(k):
        for a in range(k + 1):
            for b in range(a, k + 1):
                for c in range(b, k + 1):
                    yield (p0, a, b, c)


def _augment(g: PlaneTriangulatedGraph, cut: Cut, corners: Corners) -> Optional[PlaneTriangulatedGraph]:
    ext = corners.as_tuple()
    if len(g.vertices) == 1:
        v = g.vertices[0]
        rotation = {
            v: list(ext),
            corners.left: [corners.top, v, corners.bottom],
            corners.top: [corners.right, v, corners.left],
            corners.right: [corners.bottom, v, corners.top],
            corners.bottom: [corners.left, v, corners.right],
        }
        return PlaneTriangulatedGraph.build(rotation, ext, (v,) + ext)

    walk = g.outer_face
    k = len(walk)
    p0, a, b, c = cut
    bounds = [p0, p0 + a, p0 + b, p0 + c, p0 + k]
    arcs = [[walk[u % k] for u in range(bounds[s], bounds[s + 1] + 1)] for s in range(4)]

    # exterior vertices seen at each walk occurrence, clockwise around that vertex
    at: Dict[int, List[int]] = {q: [] for q in range(k)}
    arriving: List[int] = []
    for s in range(4):
        for u in range(bounds[s], bounds[s + 1] + 1):
            if u == p0 + k:
                arriving.append(s)
            else:
                at[u % k].append(s)
    at[p0] = arriving + at[p0]

    inserts: Dict[Tuple[str, str], List[str]] = {}
    for q in range(k):
        inserts[(walk[q], walk[q - 1])] = [ext[s] for s in at[q]]

    rotation: Dict[str, List[str]] = {}
    for v in g.vertices:
        out: List[str] = []
        for u in g.rot[v]:
            out.append(u)
            out.extend(inserts.get((v, u), ()))
        rotation[v] = out
    rotation[corners.left] = [corners.top] + arcs[0][::-1] + [corners.bottom]
    rotation[corners.top] = [corners.right] + arcs[1][::-1] + [corners.left]
    rotation[corners.right] = [corners.bottom] + arcs[2][::-1] + [corners.top]
    rotation[corners.bottom] = [corners.left] + arcs[3][::-1] + [corners.right]
    for nbrs in rotation.values():
        if len(set(nbrs)) != len(nbrs):
            return None
    return PlaneTriangulatedGraph.build(rotation, ext, tuple(g.vertices) + ext)


def _check_names(g: PlaneTriangulatedGraph, corners: Corners) -> None:
    clash = set(corners.as_tuple()) & set(g.vertices)
    if clash:
        raise InvalidGraph(f"exterior ids collide with vertices: {sorted(clash)}")


def enumerate_corner_assignments(g: PlaneTriangulatedGraph, corners: Corners = DEFAULT_CORNERS) -> List[ExtendedGraph]:
    """every augmentation without separating triangles, in lexicographic order of the cut positions"""
    _check_names(g, corners)
    found: List[ExtendedGraph] = []
    tried = 0
    for cut in _cuts(len(g.outer_face) if len(g.vertices) > 1 else 0):
        tried += 1
        aug = _augment(g, cut, corners)
        if aug is None:
            continue
        e = ExtendedGraph(graph=aug, corners=corners, assignment=cut)
        if find_separating_triangles(e):
            continue
        found.append(e)
    logger.debug("corner assignments: %d of %d cuts kept", len(found), tried)
    return found


def extend(g: PlaneTriangulatedGraph, arcs: Sequence[Sequence[str]], corners: Corners = DEFAULT_CORNERS) -> ExtendedGraph:
    """augmentation with the given arcs (left, top, right, bottom), without the properness filter"""
    _check_names(g, corners)
    wanted = [tuple(a) for a in arcs]
    for cut in _cuts(len(g.outer_face) if len(g.vertices) > 1 else 0):
        aug = _augment(g, cut, corners)
        if aug is None:
            continue
        e = ExtendedGraph(graph=aug, corners=corners, assignment=cut)
        if [e.arcs[s] for s in ("left", "top", "right", "bottom")] == wanted:
            return e
    raise InvalidGraph(f"arcs {wanted} do not describe a corner assignment of the outer face")


def is_proper(g: PlaneTriangulatedGraph) -> bool:
    return bool(enumerate_corner_assignments(g))
