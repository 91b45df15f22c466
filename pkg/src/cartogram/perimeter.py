"""perimeter cartograms: exact linear algebra plus a two-dimensional linear program"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Literal, Mapping, Optional, Sequence, Tuple, Union

from ..core.errors import InvalidLayout
from ..rel.equivalence import equivalent, junctions, order_equivalent
from ..rel.layout import Layout, Rect, four_way_points, validate_layout
from ..rel.segments import HIGH, LOW, SegmentTable, segment_table
from .lp import dot, solve_lp
from .weights import Value, WeightFunction

logger = logging.getLogger(__name__)

Mode = Literal["equivalent", "order"]
Form = Tuple[Fraction, ...]


@dataclass(frozen=True)
class PerimeterResult:
    feasible: bool
    layout: Optional[Layout] = None
    dimension: int = 0  # of the solution space of the perimeter equations
    margin: Optional[Fraction] = None
    reason: str = ""


class _Unknowns:
    """segment coordinates, then the box width and height"""

    def __init__(self, table: SegmentTable):
        self.table = table
        self.m = len(table.segments)
        self.size = self.m + 2

    def coord(self, idx: int, vertical: bool) -> Form:
        out = [Fraction(0)] * self.size
        if idx == HIGH:
            out[self.m if vertical else self.m + 1] = Fraction(1)
        elif idx != LOW:
            out[idx] = Fraction(1)
        return tuple(out)

    def diff(self, hi: Form, lo: Form) -> Form:
        return tuple(a - b for a, b in zip(hi, lo))

    def extent(self, rid: str) -> Tuple[Form, Form]:
        left, right, bottom, top = self.table.sides[rid]
        return (
            self.diff(self.coord(right, True), self.coord(left, True)),
            self.diff(self.coord(top, False), self.coord(bottom, False)),
        )


def affine_solutions(rows: Sequence[Form], rhs: Sequence[Fraction], size: int) -> Optional[Tuple[List[Fraction], List[List[Fraction]]]]:
    """solutions of rows . z = rhs as (particular, null-space basis); None if inconsistent"""
    mat = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots: List[int] = []
    r = 0
    for col in range(size):
        hit = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if hit is None:
            continue
        mat[r], mat[hit] = mat[hit], mat[r]
        p = mat[r][col]
        mat[r] = [v / p for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in mat):
        return None
    free = [c for c in range(size) if c not in pivots]
    z0 = [Fraction(0)] * size
    for i, col in enumerate(pivots):
        z0[col] = mat[i][-1]
    basis = []
    for f in free:
        vec = [Fraction(0)] * size
        vec[f] = Fraction(1)
        for i, col in enumerate(pivots):
            vec[col] = -mat[i][f]
        basis.append(vec)
    return z0, basis


def _junction_forms(unknowns: _Unknowns) -> List[Form]:
    """consecutive junctions along each segment keep their order"""
    out = []
    for i, seg in enumerate(unknowns.table.segments):
        vertical = seg.orientation == "horizontal"
        marks = junctions(unknowns.table, i)
        for (_, j1, _), (_, j2, _) in zip(marks, marks[1:]):
            out.append(unknowns.diff(unknowns.coord(j2, vertical), unknowns.coord(j1, vertical)))
    return out


def _clash(unknowns: _Unknowns, z: Sequence[Fraction]) -> Optional[Tuple[Form, Form]]:
    """two junctions from opposite sides landing on the same point of a segment"""
    for i, seg in enumerate(unknowns.table.segments):
        vertical = seg.orientation == "horizontal"
        marks = junctions(unknowns.table, i)
        for (_, j1, s1), (_, j2, s2) in zip(marks, marks[1:]):
            if s1 == s2:
                continue
            a, b = unknowns.coord(j1, vertical), unknowns.coord(j2, vertical)
            if dot(a, z) == dot(b, z):
                return unknowns.diff(b, a), unknowns.diff(a, b)
    return None


def _build(l: Layout, unknowns: _Unknowns, z: Sequence[Fraction]) -> Layout:
    rects: Dict[str, Rect] = {}
    for rid, (left, right, bottom, top) in unknowns.table.sides.items():
        x0 = dot(unknowns.coord(left, True), z)
        y0 = dot(unknowns.coord(bottom, False), z)
        w, h = (dot(f, z) for f in unknowns.extent(rid))
        rects[rid] = Rect(x0, y0, w, h)
    return Layout.build(z[unknowns.m], z[unknowns.m + 1], rects)


def realize_perimeters(
    l: Layout,
    weights: Union[WeightFunction, Mapping[str, Value]],
    mode: Mode = "equivalent",
    bbox: Optional[Tuple[Value, Value]] = None,
    seed: int = 0,
) -> PerimeterResult:
    """layout with the same segment structure whose rectangle perimeters are the weights, in exact arithmetic"""
    w = weights if isinstance(weights, WeightFunction) else WeightFunction.of(weights, "perimeter")
    w.check_ids(l)
    table = segment_table(l)
    unknowns = _Unknowns(table)
    rows: List[Form] = []
    rhs: List[Fraction] = []
    for rid in l.ids:
        wf, hf = unknowns.extent(rid)
        rows.append(tuple(2 * (a + b) for a, b in zip(wf, hf)))
        rhs.append(Fraction(w[rid]))
    if bbox is not None:
        for k, v in enumerate(bbox):
            rows.append(tuple(Fraction(1 if j == unknowns.m + k else 0) for j in range(unknowns.size)))
            rhs.append(Fraction(v))

    solved = affine_solutions(rows, rhs, unknowns.size)
    if solved is None:
        return PerimeterResult(False, reason="perimeter equations are inconsistent")
    z0, basis = solved
    dim = len(basis)
    if dim > 2:
        logger.info("perimeter solution space has dimension %d", dim)
        return PerimeterResult(False, dimension=dim, reason="solution space has more than two dimensions")

    strict: List[Form] = []
    for rid in l.ids:
        strict.extend(unknowns.extent(rid))
    if mode == "equivalent":
        strict.extend(_junction_forms(unknowns))
    bound = 2 * sum((abs(v) for v in rhs), Fraction(0)) + 1
    rng = random.Random(seed)

    stack: List[List[Form]] = [[]]
    while stack:
        extra = stack.pop()
        forms = strict + extra
        cons = []
        for g in forms:
            gn = [dot(g, b) for b in basis]
            # g(z0 + N t) >= delta
            cons.append((tuple(-v for v in gn) + (Fraction(1),), dot(g, z0)))
        objective = [Fraction(0)] * dim + [Fraction(1)]
        sol = solve_lp(objective, cons, bound, rng)
        if sol is None or sol[-1] <= 0:
            continue
        t, margin = sol[:-1], sol[-1]
        z = [z0[i] + sum((t[k] * basis[k][i] for k in range(dim)), Fraction(0)) for i in range(unknowns.size)]
        clash = _clash(unknowns, z) if mode == "order" else None
        if clash is not None:
            stack.append(extra + [clash[1]])
            stack.append(extra + [clash[0]])
            continue
        out = _build(l, unknowns, z)
        try:
            validate_layout(out)
        except InvalidLayout:
            continue
        if four_way_points(out) or not order_equivalent(l, out):
            continue
        if mode == "equivalent" and not equivalent(l, out):
            continue
        logger.info("perimeters realized (dimension %d, margin %s)", dim, margin)
        return PerimeterResult(True, out, dim, margin)
    return PerimeterResult(False, dimension=dim, reason="no point of the solution space keeps the segment order")
