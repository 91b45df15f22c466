from __future__ import annotations

import pytest

from src.core.errors import InvalidGraph
from src.core.types import edge_key
from src.data import formats
from src.graph import samples
from src.graph.corners import enumerate_corner_assignments, extend, is_proper
from src.graph.cycles import canonical_cycle, find_separating_four_cycles, nontrivial_four_cycles
from src.graph.decompose import decompose_minimal_components
from src.graph.model import PlaneTriangulatedGraph, check_plane_triangulated
from src.rel.adjacency import dual_graph


def test_faces_trace_inner_ccw_and_outer_as_given():
    e = samples.extended("windmill")
    g = e.graph
    assert tuple(g.outer_face) == e.corners.as_tuple()
    assert all(len(f) == 3 for f in g.inner_faces())
    # euler for a triangulated disk plus its outer face
    assert len(g.vertices) - len(g.edges) + len(g.faces) == 2


def test_triangle_is_proper_and_k4_is_not():
    assert is_proper(samples.graph("triangle"))
    assert not is_proper(samples.k4())
    assert enumerate_corner_assignments(samples.k4()) == []


def test_two_vertices_have_four_corner_assignments():
    hosts = enumerate_corner_assignments(samples.graph("pair"))
    assert len(hosts) == 4
    assert len({h.assignment for h in hosts}) == 4


def test_extend_reproduces_the_arcs_it_was_given():
    e = samples.extended("windmill")
    arcs = [e.arcs[s] for s in ("left", "top", "right", "bottom")]
    again = extend(e.inner, arcs)
    assert again.arcs == e.arcs
    assert set(again.graph.edges) == set(e.graph.edges)


def test_extend_rejects_arcs_that_do_not_fit():
    g = samples.graph("pair")
    with pytest.raises(InvalidGraph):
        extend(g, [["A"], ["B"], ["A"], ["B"]])


def test_inconsistent_rotation_is_rejected():
    g = PlaneTriangulatedGraph.build({"a": ["b", "c"], "b": ["c"], "c": ["a", "b"]}, ("a", "b", "c"), ("a", "b", "c"))
    with pytest.raises(InvalidGraph):
        check_plane_triangulated(g)


def test_malformed_graph_document_is_rejected():
    with pytest.raises(InvalidGraph):
        formats.graph_from_json({"vertices": ["a"], "outer_face": ["a"]})


def test_windmill_center_sits_in_a_trivial_four_cycle():
    e = samples.extended("windmill")
    found = find_separating_four_cycles(e)
    ring = canonical_cycle(("A", "B", "C", "D"))
    assert any(fc.vertices == ring and fc.inside == frozenset({"E"}) for fc in found)
    assert nontrivial_four_cycles(e) == []


def test_windmill_is_a_single_component():
    decomp = decompose_minimal_components(samples.extended("windmill"))
    assert len(decomp.components) == 1
    assert decomp.components[0].parent is None


def test_nested_windmill_splits_into_components():
    layout = samples.nested_windmill(2)
    e = dual_graph(layout)
    decomp = decompose_minimal_components(e)
    assert len(decomp.components) == 2
    inner = decomp.components[1]
    assert inner.parent == 0
    assert inner.placeholder in decomp.components[0].graph.inner_vertices
    assert decomp.glued_vertices() == set(e.inner_vertices)
    for comp in decomp.components:
        assert nontrivial_four_cycles(comp.graph) == []
        assert len(comp.graph.inner_vertices) == 5


def test_sample_graphs_match_their_layouts():
    g = samples.graph("sun")
    assert set(g.vertices) == {"a", "b", "c", "ab", "bc", "ca"}
    assert edge_key("a", "b") in set(g.edges)
    assert edge_key("ab", "c") not in set(g.edges)
