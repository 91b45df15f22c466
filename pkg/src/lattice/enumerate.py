from __future__ import annotations

import logging
from collections import deque
from typing import Any, Dict, List, Optional

import networkx as nx

from ..core.config import SearchSettings
from ..core.errors import CapExceeded
from ..graph.model import ExtendedGraph
from ..rel.labeling import RegularEdgeLabeling, initial_rel
from .moves import extremal_rel, moves_in
from .poset import FlipPoset

logger = logging.getLogger(__name__)


def lattice_graph(host: ExtendedGraph, cap: Optional[int] = None) -> nx.DiGraph:
    """cover graph of the labeling lattice; nodes are encodings, edges are upward moves"""
    cap = SearchSettings().enumerate_cap if cap is None else cap
    start = extremal_rel(initial_rel(host), "down")
    graph = nx.DiGraph()
    graph.add_node(start.encoding, rel=start)
    queue = deque([start])
    while queue:
        rel = queue.popleft()
        for move in moves_in(rel, "up"):
            nxt = rel.replaced(dict(move.changes))
            if nxt.encoding not in graph:
                if graph.number_of_nodes() >= cap:
                    err = CapExceeded(cap)
                    err.explored = graph.number_of_nodes()
                    raise err
                graph.add_node(nxt.encoding, rel=nxt)
                queue.append(nxt)
            graph.add_edge(rel.encoding, nxt.encoding, item=move.item.name)
    logger.info("lattice has %d labelings", graph.number_of_nodes())
    return graph


def enumerate_rels(host: ExtendedGraph, cap: Optional[int] = None) -> List[RegularEdgeLabeling]:
    graph = lattice_graph(host, cap)
    return [graph.nodes[n]["rel"] for n in sorted(graph.nodes)]


def lattice_dot(graph: nx.DiGraph) -> str:
    names = {n: f"r{i}" for i, n in enumerate(sorted(graph.nodes))}
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for n in sorted(graph.nodes):
        lines.append(f'  {names[n]} [label="{names[n]}"];')
    for a, b, data in sorted(graph.edges(data=True)):
        lines.append(f'  {names[a]} -> {names[b]} [label="{data["item"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_json(poset: FlipPoset) -> Dict[str, Any]:
    """elements as [item, index]; relations are the covering pairs [lower, upper]"""
    kinds = {e[0].name: e[0].kind for e in poset.elements}
    return {
        "elements": [[e[0].name, e[1]] for e in poset.elements],
        "relations": sorted([[a[0].name, a[1]], [b[0].name, b[1]]] for a, b in poset.covers.edges),
        "kinds": dict(sorted(kinds.items())),
    }
