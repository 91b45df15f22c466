from __future__ import annotations

import json

from src.cli import EXIT_BUDGET, EXIT_ERROR, EXIT_NONE, EXIT_OK, main
from src.data import formats
from src.graph import samples
from src.rel.segments import is_one_sided


def _write(tmp_path, name, doc) -> str:
    path = tmp_path / name
    formats.save(str(path), doc)
    return str(path)


def _out(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_check_reports_properness(tmp_path, capsys):
    ok = _write(tmp_path, "windmill.json", formats.graph_to_json(samples.graph("windmill")))
    assert main(["check", ok]) == EXIT_OK
    out = _out(capsys)
    assert out["proper"] and out["corner_assignments"] >= 1
    bad = _write(tmp_path, "k4.json", formats.graph_to_json(samples.k4()))
    assert main(["check", bad]) == EXIT_NONE
    assert _out(capsys)["proper"] is False


def test_dual_and_render(tmp_path, capsys):
    g = _write(tmp_path, "sun.json", formats.graph_to_json(samples.graph("sun")))
    layout = str(tmp_path / "dual.json")
    assert main(["dual", g, "--out", layout]) == EXIT_OK
    capsys.readouterr()
    svg = str(tmp_path / "dual.svg")
    assert main(["render", layout, "--out", svg, "--witness"]) == EXIT_OK
    assert _out(capsys) == {"layouts": 1, "svg": svg}
    with open(svg, encoding="utf-8") as f:
        assert f.read().count("<rect ") == 6


def test_enumerate_with_exports_and_cap(tmp_path, capsys):
    host = _write(tmp_path, "host.json", formats.extended_to_json(samples.extended("windmill")))
    out_dir = tmp_path / "rels"
    dot = tmp_path / "lattice.dot"
    assert main(["enumerate", host, "--out-dir", str(out_dir), "--dot", str(dot), "--poset", str(tmp_path / "p.json")]) == EXIT_OK
    out = _out(capsys)
    assert out["count"] == 2 and out["moves"] == 1 and out["poset_elements"] == 1
    assert sorted(p.name for p in out_dir.iterdir()) == ["layout_000.json", "layout_001.json", "rel_000.json", "rel_001.json"]
    assert dot.read_text(encoding="utf-8").count("->") == 1
    assert main(["enumerate", host, "--cap", "1"]) == EXIT_BUDGET


def test_find_one_sided(tmp_path, capsys):
    g = _write(tmp_path, "windmill.json", formats.graph_to_json(samples.graph("windmill")))
    layout = str(tmp_path / "one-sided.json")
    assert main(["find-one-sided", g, "--algorithm", "stretched-pairs", "--out", layout]) == EXIT_OK
    out = _out(capsys)
    assert out["exists"] and out["layout"] == layout
    assert is_one_sided(formats.layout_from_json(formats.load(layout)))[0]
    bad = _write(tmp_path, "k4.json", formats.graph_to_json(samples.k4()))
    assert main(["find-one-sided", bad]) == EXIT_NONE
    capsys.readouterr()
    sun = _write(tmp_path, "sun.json", formats.graph_to_json(samples.graph("sun")))
    for algorithm in ("extreme-sets", "stretched-pairs"):
        assert main(["find-one-sided", sun, "--algorithm", algorithm]) == EXIT_NONE
        assert _out(capsys)["exists"] is False


def test_cartograms(tmp_path, capsys):
    layout = _write(tmp_path, "windmill.json", formats.layout_to_json(samples.layout("windmill")))
    areas = _write(tmp_path, "areas.json", {"weights": {"A": 1, "B": 2, "C": 3, "D": 4, "E": 5}})
    assert main(["area", layout, areas, "--uniqueness", "3"]) == EXIT_OK
    out = _out(capsys)
    assert out["bbox"][0] == out["bbox"][1]
    assert out["uniqueness"]["trials"] == 3
    perims = _write(tmp_path, "perims.json", {"weights": {"A": 6, "B": 6, "C": 6, "D": 6, "E": 4}, "kind": "perimeter"})
    assert main(["perimeter", layout, perims, "--bbox", "3", "3"]) == EXIT_OK
    assert _out(capsys)["feasible"]
    too_big = _write(tmp_path, "big.json", {"weights": {"A": 6, "B": 6, "C": 6, "D": 6, "E": 12}, "kind": "perimeter"})
    assert main(["perimeter", layout, too_big]) == EXIT_NONE


def test_tree(tmp_path, capsys):
    tree = _write(tmp_path, "tree.json", {"root": "r", "children": {"r": ["a", "b"], "a": ["c"]}})
    assert main(["tree", tree, "--orientation", "root-at-left"]) == EXIT_OK
    assert _out(capsys)["rectangles"] == 4


def test_errors_exit_with_one(tmp_path, capsys):
    assert main(["check", str(tmp_path / "missing.json")]) == EXIT_ERROR
    bad = _write(tmp_path, "bad.json", {"vertices": ["a"]})
    assert main(["dual", bad]) == EXIT_ERROR
    assert main(["no-such-command"]) == EXIT_ERROR
    assert main(["--help"]) == EXIT_OK
