from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Tuple

import networkx as nx

from .labeling import RegularEdgeLabeling
from .layout import Layout, Rect


def _levels(rel: RegularEdgeLabeling, color: str, low: str, high: str) -> Tuple[Dict[str, Tuple[int, int]], int]:
    """per inner vertex (low side level, high side level) and the level of the far box side.

    Sides glued by an edge of the given color share a class. Each rectangle runs from its low class
    to its high class, and the two ends of an edge of the other color overlap on this axis. Classes
    are ordered by longest path, then numbered one per line.
    """
    uf = nx.utils.UnionFind()
    uf[("hi", low)]
    uf[("lo", high)]
    for lab in rel.labels.values():
        if lab.color == color:
            uf.union(("hi", lab.tail), ("lo", lab.head))
    inner = set(rel.host.inner_vertices)
    dag = nx.DiGraph()
    dag.add_node(uf[("hi", low)])
    for v in inner:
        dag.add_edge(uf[("lo", v)], uf[("hi", v)])
    for lab in rel.labels.values():
        if lab.color != color and lab.tail in inner and lab.head in inner:
            dag.add_edge(uf[("lo", lab.tail)], uf[("hi", lab.head)])
            dag.add_edge(uf[("lo", lab.head)], uf[("hi", lab.tail)])
    level: Dict[Hashable, int] = {}
    for node in nx.topological_sort(dag):
        level[node] = max((level[p] + 1 for p in dag.predecessors(node)), default=0)
    # ties within a layer get their own line, else unrelated segments could meet end to end
    rank = {node: i for i, node in enumerate(sorted(level, key=lambda n: (level[n], str(n))))}
    spans = {v: (rank[uf[("lo", v)]], rank[uf[("hi", v)]]) for v in inner}
    return spans, rank[uf[("lo", high)]]


def layout_from_rel(rel: RegularEdgeLabeling) -> Layout:
    """rectangular dual of a labeling on the integer grid; rel_from_layout gives the labeling back"""
    c = rel.host.corners
    xs, width = _levels(rel, "blue", c.left, c.right)
    ys, height = _levels(rel, "red", c.bottom, c.top)
    rects = {}
    for v in rel.host.inner_vertices:
        x0, x1 = xs[v]
        y0, y1 = ys[v]
        rects[v] = Rect(Fraction(x0), Fraction(y0), Fraction(x1 - x0), Fraction(y1 - y0))
    return Layout.build(width, height, rects)
