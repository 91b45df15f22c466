from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import replace
from typing import Any, Dict, Optional, Sequence

from .cartogram.area import check_area_uniqueness, realize_areas
from .cartogram.perimeter import realize_perimeters
from .core.config import SearchSettings, SolverSettings, log_level
from .core.errors import BudgetExceeded, CapExceeded, LayoutError, NotProper
from .data import formats
from .graph.corners import enumerate_corner_assignments
from .graph.cycles import find_separating_four_cycles, find_separating_triangles
from .graph.model import ExtendedGraph
from .lattice.enumerate import lattice_dot, lattice_graph, poset_json
from .lattice.poset import build_flip_poset
from .rel.labeling import initial_rel
from .rel.realize import layout_from_rel
from .rel.segments import is_one_sided
from .render.svg import RenderSpec, render_svg
from .search.budget import SearchBudget
from .search.find import STRATEGIES, find_one_sided
from .tree.layout import layout_from_tree

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_ERROR, EXIT_NONE, EXIT_BUDGET = 0, 1, 2, 3


def emit(doc: Dict[str, Any]) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _host(path: str, corners: int) -> ExtendedGraph:
    """extended graph from a file; plain graphs pick their corner assignment by index"""
    doc = formats.load(path)
    if "corners" in doc or "arcs" in doc:
        return formats.extended_from_json(doc)
    hosts = enumerate_corner_assignments(formats.graph_from_json(doc))
    if not hosts:
        raise NotProper("graph has no corner assignment without separating triangles")
    if not 0 <= corners < len(hosts):
        raise LayoutError(f"--corners {corners} out of range; graph has {len(hosts)} assignments")
    logger.debug("using corner assignment %d of %d", corners, len(hosts))
    return hosts[corners]


def _write_layout(path: Optional[str], layout) -> Optional[str]:
    if not path:
        return None
    formats.save(path, formats.layout_to_json(layout))
    return path


def cmd_check(args: argparse.Namespace) -> int:
    g = formats.graph_from_json(formats.load(args.graph))
    hosts = enumerate_corner_assignments(g)
    out: Dict[str, Any] = {
        "valid": True,
        "vertices": len(g.vertices),
        "proper": bool(hosts),
        "corner_assignments": len(hosts),
        "separating_triangles": [list(t) for t in find_separating_triangles(g)],
    }
    if hosts:
        idx = min(max(args.corners, 0), len(hosts) - 1)
        out["selected"] = idx
        out["separating_four_cycles"] = [
            {"cycle": list(c.vertices), "inside": sorted(c.inside)} for c in find_separating_four_cycles(hosts[idx])
        ]
    emit(out)
    return EXIT_OK if hosts else EXIT_NONE


def cmd_dual(args: argparse.Namespace) -> int:
    host = _host(args.graph, args.corners)
    rel = initial_rel(host)
    layout = layout_from_rel(rel)
    if args.rel:
        formats.save(args.rel, formats.rel_to_json(rel))
    _write_layout(args.out, layout)
    emit({"layout": formats.layout_to_json(layout), "one_sided": is_one_sided(layout)[0]})
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    host = _host(args.graph, args.corners)
    cap = args.cap if args.cap is not None else SearchSettings().enumerate_cap
    graph = lattice_graph(host, cap)
    names = sorted(graph.nodes)
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for i, enc in enumerate(names):
            rel = graph.nodes[enc]["rel"]
            formats.save(os.path.join(args.out_dir, f"layout_{i:03d}.json"), formats.layout_to_json(layout_from_rel(rel)))
            formats.save(os.path.join(args.out_dir, f"rel_{i:03d}.json"), formats.rel_to_json(rel))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(lattice_dot(graph))
    out: Dict[str, Any] = {"count": len(names), "moves": graph.number_of_edges()}
    if args.poset:
        poset = build_flip_poset(host)
        formats.save(args.poset, poset_json(poset))
        out["poset_elements"] = len(poset)
    emit(out)
    return EXIT_OK


def cmd_find(args: argparse.Namespace) -> int:
    g = formats.graph_from_json(formats.load(args.graph))
    budget = SearchBudget.from_settings(max_sets=args.budget)
    res = find_one_sided(g, budget, args.algorithm)
    path = _write_layout(args.out, res.layout) if res.exists else None
    emit(
        {
            "exists": res.exists,
            "layout": path if path else (formats.layout_to_json(res.layout) if res.layout else None),
            "corner_assignment": res.corner_assignment,
            "components": res.components,
            "k": res.k,
            "explored": res.explored,
            "algorithm": args.algorithm,
        }
    )
    return EXIT_OK if res.exists else EXIT_NONE


def cmd_area(args: argparse.Namespace) -> int:
    layout = formats.layout_from_json(formats.load(args.layout))
    weights = formats.weights_from_json(formats.load(args.weights))
    settings = SolverSettings() if args.tol is None else replace(SolverSettings(), tol=args.tol)
    res = realize_areas(layout, weights, settings)
    _write_layout(args.out, res.layout)
    out: Dict[str, Any] = {
        "residual": res.residual,
        "iterations": res.iterations,
        "method": res.method,
        "bbox": [float(res.layout.width), float(res.layout.height)],
        "rects": {rid: {"x": float(r.x), "y": float(r.y), "w": float(r.w), "h": float(r.h)} for rid, r in res.layout.rects},
    }
    if args.uniqueness:
        report = check_area_uniqueness(layout, weights, args.uniqueness, args.seed, settings)
        out["uniqueness"] = {"trials": report.trials, "spread": report.spread}
    emit(out)
    return EXIT_OK


def cmd_perimeter(args: argparse.Namespace) -> int:
    layout = formats.layout_from_json(formats.load(args.layout))
    weights = formats.weights_from_json(formats.load(args.weights))
    bbox = tuple(formats.parse_number(v) for v in args.bbox) if args.bbox else None
    res = realize_perimeters(layout, weights, args.mode, bbox, args.seed)  # type: ignore[arg-type]
    out: Dict[str, Any] = {"feasible": res.feasible, "dimension": res.dimension, "reason": res.reason}
    if res.feasible and res.layout is not None:
        _write_layout(args.out, res.layout)
        out["layout"] = formats.layout_to_json(res.layout)
    emit(out)
    return EXIT_OK if res.feasible else EXIT_NONE


def cmd_tree(args: argparse.Namespace) -> int:
    tree = formats.tree_from_json(formats.load(args.tree))
    layout = layout_from_tree(tree, args.orientation)
    _write_layout(args.out, layout)
    emit({"layout": formats.layout_to_json(layout), "rectangles": len(layout)})
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    layouts = [formats.layout_from_json(formats.load(p)) for p in args.layouts]
    witnesses = [is_one_sided(l)[1] for l in layouts] if args.witness else None
    spec = RenderSpec(labels=not args.no_labels, segments=args.segments)
    svg = render_svg(layouts, spec, witnesses)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(svg)
    emit({"svg": args.out, "layouts": len(layouts)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rect-layouts", description="rectangular layouts, labelings and cartograms")
    p.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate a graph and report corner assignments and separating cycles")
    s.add_argument("graph")
    s.add_argument("--corners", type=int, default=0)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("dual", help="some rectangular dual of a graph")
    s.add_argument("graph")
    s.add_argument("--corners", type=int, default=0)
    s.add_argument("--out", type=str, default="")
    s.add_argument("--rel", type=str, default="", help="also write the labeling")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("enumerate", help="all labelings of an extended graph")
    s.add_argument("graph")
    s.add_argument("--corners", type=int, default=0)
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--out-dir", type=str, default="")
    s.add_argument("--dot", type=str, default="", help="lattice as a DOT digraph")
    s.add_argument("--poset", type=str, default="", help="flip poset as JSON")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("find-one-sided", help="one-sided (area-universal) dual of a graph")
    s.add_argument("graph")
    s.add_argument("--algorithm", choices=sorted(STRATEGIES), default="extreme-sets")
    s.add_argument("--budget", type=int, default=None, help="cap on candidate sets per corner assignment")
    s.add_argument("--out", type=str, default="")
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("area", help="area cartogram")
    s.add_argument("layout")
    s.add_argument("weights")
    s.add_argument("--tol", type=float, default=None)
    s.add_argument("--uniqueness", type=int, default=0, help="re-solve from N random starts")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", type=str, default="")
    s.set_defaults(func=cmd_area)

    s = sub.add_parser("perimeter", help="perimeter cartogram")
    s.add_argument("layout")
    s.add_argument("weights")
    s.add_argument("--mode", choices=["equivalent", "order"], default="equivalent")
    s.add_argument("--bbox", nargs=2, default=None, metavar=("W", "H"))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", type=str, default="")
    s.set_defaults(func=cmd_perimeter)

    s = sub.add_parser("tree", help="one-sided layout spanned by a tree")
    s.add_argument("tree")
    s.add_argument("--orientation", choices=["root-at-bottom", "root-at-left"], default="root-at-bottom")
    s.add_argument("--out", type=str, default="")
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("render", help="draw layouts side by side as SVG")
    s.add_argument("layouts", nargs="+")
    s.add_argument("--out", type=str, required=True)
    s.add_argument("--segments", action="store_true", help="overlay maximal segments")
    s.add_argument("--witness", action="store_true", help="highlight a segment that is not one-sided")
    s.add_argument("--no-labels", action="store_true")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    p = build_parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors
        return EXIT_OK if not exc.code else EXIT_ERROR
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else log_level(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"error: {exc} (explored {exc.explored})", file=sys.stderr)
        return EXIT_BUDGET
    except NotProper as exc:
        print(f"none: {exc}", file=sys.stderr)
        return EXIT_NONE
    except (LayoutError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
