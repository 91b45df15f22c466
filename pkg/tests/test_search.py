from __future__ import annotations

import random
from collections import Counter

import networkx as nx
import pytest

from src.core.errors import BudgetExceeded, MissingLeaf, NotProper
from src.core.types import edge_key
from src.graph import samples
from src.graph.corners import enumerate_corner_assignments
from src.graph.decompose import decompose_minimal_components
from src.graph.model import PlaneTriangulatedGraph
from src.lattice.moves import FlippableItem
from src.lattice.poset import build_flip_poset, free_items
from src.rel.adjacency import dual_graph
from src.rel.labeling import RegularEdgeLabeling, initial_rel, iter_rels
from src.rel.layout import validate_layout
from src.rel.realize import layout_from_rel
from src.rel.segments import is_one_sided
from src.search.budget import SearchBudget
from src.search.extreme import candidate_sets, search_extreme_sets
from src.search.find import STRATEGIES, find_one_sided, get_strategy
from src.search.glue import glue_components
from src.search.stretched import StretchedPair, candidate_pairs, fixes_edge, search_stretched_pairs


def _labeling_is_one_sided(rel: RegularEdgeLabeling) -> bool:
    """read the maximal segments straight off the labeling, without drawing it"""
    c = rel.host.corners
    inner = rel.host.inner_vertices
    for color, low, high in (("blue", c.left, c.right), ("red", c.bottom, c.top)):
        uf = nx.utils.UnionFind()
        for lab in rel.labels.values():
            if lab.color == color:
                uf.union(("hi", lab.tail), ("lo", lab.head))
        box = {uf[("hi", low)], uf[("lo", high)]}
        before = Counter(uf[("hi", v)] for v in inner)
        after = Counter(uf[("lo", v)] for v in inner)
        for seg in set(before) - box:
            if before[seg] > 1 and after[seg] > 1:
                return False
    return True


def _brute_force(g: PlaneTriangulatedGraph) -> bool:
    return any(_labeling_is_one_sided(rel) for host in enumerate_corner_assignments(g) for rel in iter_rels(host))


def _edges(g):
    return {edge_key(u, v) for u, v in g.edges}


def _random_graphs(count: int, seed: int):
    rng = random.Random(seed)
    for i in range(count):
        yield f"random{i}", dual_graph(samples.random_sliceable_layout(rng.randint(2, 9), rng)).inner


def _check_found(res, g, name):
    validate_layout(res.layout)
    assert is_one_sided(res.layout)[0], name
    assert _edges(dual_graph(res.layout).inner) == _edges(g), name


@pytest.mark.parametrize("algorithm", sorted(STRATEGIES))
def test_search_agrees_with_brute_force(algorithm):
    for name in ("single", "pair", "triangle", "windmill", "grid", "sun"):
        g = samples.graph(name)
        res = find_one_sided(g, algorithm=algorithm)
        assert res.exists == _brute_force(g), name
        if res.exists:
            _check_found(res, g, name)


@pytest.mark.parametrize("algorithm", sorted(STRATEGIES))
def test_search_agrees_with_brute_force_on_random_graphs(algorithm):
    for name, g in _random_graphs(100, 29):
        res = find_one_sided(g, algorithm=algorithm)
        assert res.exists == _brute_force(g), name
        if res.exists:
            _check_found(res, g, name)


def test_labeling_reading_matches_the_drawing():
    for name in ("pair", "triangle", "windmill", "grid", "sun"):
        for host in enumerate_corner_assignments(samples.graph(name)):
            for rel in iter_rels(host):
                assert _labeling_is_one_sided(rel) == is_one_sided(layout_from_rel(rel))[0], name


def test_sun_has_no_one_sided_dual():
    g = samples.graph("sun")
    assert not _brute_force(g)
    for algorithm in sorted(STRATEGIES):
        res = find_one_sided(g, algorithm=algorithm)
        assert not res.exists
        assert res.layout is None


def test_two_rectangles_split_either_way():
    hosts = enumerate_corner_assignments(samples.graph("pair"))
    assert len(hosts) == 4
    shapes = set()
    for host in hosts:
        (rel,) = iter_rels(host)
        layout = layout_from_rel(rel)
        assert is_one_sided(layout)[0]
        shapes.add("side by side" if layout["A"].h == layout.height else "stacked")
    assert shapes == {"side by side", "stacked"}
def test_windmill_has_a_one_sided_dual():
    res = find_one_sided(samples.graph("windmill"))
    assert res.exists
    assert sum(res.components) >= 5
    assert res.explored >= 1


def test_component_searches_return_one_sided_labelings():
    budget = SearchBudget(max_sets=10_000, max_seconds=60)
    for comp in decompose_minimal_components(samples.extended("sun")).components:
        host = comp.graph
        poset = build_flip_poset(host)
        a = search_extreme_sets(host, poset, budget.meter())
        b = search_stretched_pairs(host, poset, budget.meter())
        assert (a is None) == (b is None)
        for rel in (a, b):
            if rel is not None:
                assert is_one_sided(layout_from_rel(rel))[0]
                assert not any(x.kind == "edge" for x in free_items(poset, rel))


def test_nested_windmills_are_glued_back_together():
    layout = samples.nested_windmill(3)
    g = dual_graph(layout).inner
    for algorithm in sorted(STRATEGIES):
        res = find_one_sided(g, algorithm=algorithm)
        assert res.exists
        assert len(res.components) >= 3
        assert is_one_sided(res.layout)[0]
        assert _edges(dual_graph(res.layout).inner) == _edges(g)


def test_glue_needs_every_component():
    decomp = decompose_minimal_components(dual_graph(samples.nested_windmill(2)))
    with pytest.raises(MissingLeaf):
        glue_components(decomp, {0: layout_from_rel(next(iter_rels(decomp.components[0].graph)))})


def test_placeholders_stand_for_the_boundary_of_nested_components():
    rng = random.Random(31)
    for i in range(100):
        decomp = decompose_minimal_components(dual_graph(samples.random_sliceable_layout(rng.randint(4, 12), rng)))
        stands_for = decomp.stands_for()
        for comp in decomp.components:
            if comp.parent is None:
                continue
            parent = set(decomp.components[comp.parent].graph.graph.vertices)
            for v in comp.graph.corners.as_tuple():
                assert v in parent or any(v in stands_for[p] for p in parent if p in stands_for), i


def test_glue_rebuilds_random_hosts():
    rng = random.Random(37)
    for i in range(100):
        host = dual_graph(samples.random_sliceable_layout(rng.randint(4, 12), rng))
        decomp = decompose_minimal_components(host)
        layouts = {c.index: layout_from_rel(initial_rel(c.graph)) for c in decomp.components}
        glued = glue_components(decomp, layouts)
        validate_layout(glued)
        assert _edges(dual_graph(glued).inner) == _edges(host.inner), i


def test_glue_of_a_single_component_is_the_identity():
    host = samples.extended("windmill")
    decomp = decompose_minimal_components(host)
    layout = samples.layout("windmill")
    assert glue_components(decomp, {0: layout}) == layout


def test_improper_graph_is_reported():
    with pytest.raises(NotProper):
        find_one_sided(samples.k4())


def test_budget_meter_counts_candidate_sets():
    meter = SearchBudget(max_sets=1, max_seconds=60).meter()
    meter.tick()
    with pytest.raises(BudgetExceeded) as info:
        meter.tick()
    assert info.value.explored == 1


def test_budget_and_strategy_arguments_are_checked():
    with pytest.raises(ValueError):
        SearchBudget(max_sets=0, max_seconds=1)
    with pytest.raises(ValueError):
        get_strategy("bogus")
    assert SearchBudget.from_settings(max_sets=7).max_sets == 7


def test_candidate_sets_stay_below_half_the_vertices():
    poset = build_flip_poset(samples.extended("windmill"))
    sets = list(candidate_sets(poset))
    # one flippable vertex allows only the empty set
    assert sets == [set()]


def test_stretched_pairs():
    a = FlippableItem("vertex", ("a",))
    b = FlippableItem("vertex", ("b",))
    with pytest.raises(ValueError):
        StretchedPair(None, None)
    with pytest.raises(ValueError):
        StretchedPair(a, a)
    pairs = candidate_pairs([a, b])
    assert len(pairs) == 6
    assert StretchedPair(None, a) in pairs and StretchedPair(a, None) in pairs


def _check_fixed_edges(host, name):
    poset = build_flip_poset(host)
    vertices = [x for x in poset.items if x.kind == "vertex" and poset.height(x) > 0]
    edges = [x for x in poset.items if x.kind == "edge"]
    for rel in iter_rels(host):
        free = free_items(poset, rel)
        for pair in candidate_pairs(vertices):
            for e in edges:
                if fixes_edge(poset, rel, pair, e):
                    assert e not in free, name


def test_fixed_edges_are_not_free():
    for name in ("windmill", "grid", "sun"):
        for comp in decompose_minimal_components(samples.extended(name)).components:
            _check_fixed_edges(comp.graph, name)
