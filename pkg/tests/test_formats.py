from __future__ import annotations

from fractions import Fraction

import pytest

from src.cartogram.weights import WeightFunction
from src.core.errors import InvalidLayout, InvalidTree, InvalidWeights, LayoutError
from src.data import formats
from src.graph import samples
from src.rel.labeling import initial_rel
from src.tree.layout import RootedTree


def test_exact_numbers_travel_as_strings():
    assert formats.fmt(Fraction(3)) == "3"
    assert formats.fmt(Fraction(-1, 3)) == "-1/3"
    assert formats.parse_number("2/6") == Fraction(1, 3)
    assert formats.parse_number(0.5) == Fraction(1, 2)
    with pytest.raises(ValueError):
        formats.parse_number(True)


def test_layout_document(tmp_path):
    l = samples.nested_windmill(2)
    doc = formats.layout_to_json(l)
    assert doc["bbox"] == ["3", "3"]
    assert doc["rects"]["E2"] == {"x": "4/3", "y": "4/3", "w": "1/3", "h": "1/3"}
    path = tmp_path / "layout.json"
    formats.save(str(path), doc)
    assert formats.layout_from_json(formats.load(str(path))) == l


def test_malformed_layout_document():
    with pytest.raises(InvalidLayout):
        formats.layout_from_json({"bbox": ["1"], "rects": {}})
    with pytest.raises(InvalidLayout):
        formats.layout_from_json({"bbox": ["1", "1"], "rects": {"A": {"x": "0", "y": "0", "w": "x", "h": "1"}}})
    with pytest.raises(InvalidLayout):
        formats.layout_from_json({"bbox": ["1", "1"], "rects": {"A": ["0", "0", "1", "1"]}})


def test_graph_documents():
    e = samples.extended("windmill")
    again = formats.extended_from_json(formats.extended_to_json(e))
    assert again.corners == e.corners
    assert set(again.graph.edges) == set(e.graph.edges)
    plain = formats.graph_from_json(formats.graph_to_json(e.inner))
    assert set(plain.edges) == set(e.inner.edges)
    by_arcs = dict(formats.graph_to_json(e.inner))
    by_arcs["arcs"] = {s: list(e.arcs[s]) for s in ("left", "top", "right", "bottom")}
    assert formats.extended_from_json(by_arcs).arcs == e.arcs


def test_labeling_document():
    host = samples.extended("sun")
    rel = initial_rel(host)
    doc = formats.rel_to_json(rel)
    assert formats.rel_from_json(doc, host) == rel
    doc["edges"][0]["color"] = "green"
    with pytest.raises(LayoutError):
        formats.rel_from_json(doc, host)


def test_weights_document():
    w = WeightFunction.of({"A": Fraction(1, 3), "B": 2.5}, "perimeter")
    doc = formats.weights_to_json(w)
    assert doc == {"weights": {"A": "1/3", "B": 2.5}, "kind": "perimeter"}
    assert formats.weights_from_json(doc) == w
    with pytest.raises(InvalidWeights):
        formats.weights_from_json({"weights": {"A": "lots"}})
    with pytest.raises(InvalidWeights):
        formats.weights_from_json({"weights": {"A": -1}})


def test_tree_document():
    t = RootedTree.of("r", {"r": ["a", "b"]})
    assert formats.tree_from_json(formats.tree_to_json(t)) == t
    with pytest.raises(InvalidTree):
        formats.tree_from_json({"children": {}})


def test_layout_file_with_rect_objects(tmp_path):
    path = tmp_path / "two.json"
    path.write_text(
        '{"bbox": ["2", "1"], "rects": {"A": {"x": "0", "y": "0", "w": "1/2", "h": "1"},'
        ' "B": {"x": "1/2", "y": "0", "w": "3/2", "h": "1"}}}',
        encoding="utf-8",
    )
    l = formats.layout_from_json(formats.load(str(path)))
    assert l.bbox == (2, 1)
    assert l["B"].x == Fraction(1, 2) and l["B"].w == Fraction(3, 2)
