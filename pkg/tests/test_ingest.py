from __future__ import annotations

import numpy as np
import pytest

import dirspec as ds
from dirspec.errors import DataError
from dirspec.ingest import format_cell, tree_node_count

from conftest import path_graph


def test_parse_simple_path(tmp_path):
    f = tmp_path / "p3.edges"
    f.write_text("a b\nb c\n")
    g = ds.parse_edge_list(f)
    assert g.labels == ("a", "b", "c")
    assert g.edge_count == 2


def test_parse_comments_and_duplicates(tmp_path):
    f = tmp_path / "k2.edges"
    f.write_text("# comment\n1 2\n2 1\n")
    g = ds.parse_edge_list(f)
    assert g.node_count == 2
    assert g.edge_count == 1
    assert g.cleaning.duplicates == 1


def test_parse_malformed_line(tmp_path):
    f = tmp_path / "bad.edges"
    f.write_text("a b\na b c\n")
    with pytest.raises(DataError, match="line 2"):
        ds.parse_edge_list(f)


def test_parse_empty_file(tmp_path):
    f = tmp_path / "empty.edges"
    f.write_text("# nothing\n\n")
    with pytest.raises(DataError, match="empty"):
        ds.parse_edge_list(f)
    with pytest.raises(DataError, match="cannot read"):
        ds.parse_edge_list(tmp_path / "missing.edges")


def test_gen_tree_examples():
    star = ds.gen_tree(3, 1)
    assert star.node_count == 4
    assert sorted(star.degree) == [1, 1, 1, 3]

    t = ds.gen_tree(3, 2)
    assert t.node_count == 10
    assert t.edge_count == 9

    assert tree_node_count(3, 10) == 1 + 3 * (2**10 - 1) == 3070
    assert ds.gen_tree(3, 10).node_count == 3070


def test_gen_tree_interior_degrees_and_leaf_count():
    for d, depth in ((3, 4), (4, 3), (5, 2), (2, 5)):
        g = ds.gen_tree(d, depth)
        leaves = int((g.degree == 1).sum())
        interior = g.degree[g.degree > 1]
        assert (interior == d).all()
        assert leaves == d * (d - 1) ** (depth - 1)
        assert g.node_count == tree_node_count(d, depth)


def test_gen_tree_validation():
    with pytest.raises(DataError):
        ds.gen_tree(1, 3)
    with pytest.raises(DataError):
        ds.gen_tree(3, 0)
    with pytest.raises(DataError, match="too large"):
        ds.gen_tree(3, 25)


def test_gen_grid_examples():
    c4 = ds.gen_grid(2, 2)
    assert c4.node_count == 4
    assert c4.edge_count == 4
    assert (c4.degree == 2).all()

    p5 = ds.gen_grid(1, 5)
    assert p5.labeled_edges() == path_graph(5).labeled_edges()

    g = ds.gen_grid(100, 100)
    assert (g.node_count, g.edge_count) == (10000, 19800)


def test_gen_grid_degree_structure():
    g = ds.gen_grid(7, 5)
    assert set(int(d) for d in g.degree) == {2, 3, 4}
    assert int((g.degree == 2).sum()) == 4
    assert g.edge_count == 7 * 4 + 5 * 6


def test_gen_whisker_examples():
    g = ds.gen_whisker(3, 1, 1)
    assert g.node_count == 4
    assert g.edge_count == 4

    g = ds.gen_whisker(10, 5, 3)
    assert g.node_count == 25
    assert int((g.degree == 1).sum()) == 5

    with pytest.raises(DataError):
        ds.gen_whisker(2, 1, 1)


def test_gen_random_connected_reproducible():
    g1 = ds.gen_random_connected(25, 0.2, seed=3)
    g2 = ds.gen_random_connected(25, 0.2, seed=3)
    assert g1 == g2
    assert g1.node_count == 25
    assert ds.is_connected(g1)
    g3 = ds.gen_random_connected(25, 0.2, seed=4)
    assert g3.labeled_edges() != g1.labeled_edges()
    with pytest.raises(DataError):
        ds.gen_random_connected(1, 0.5)
    with pytest.raises(DataError):
        ds.gen_random_connected(10, 0.0)


def test_write_parse_round_trip(tmp_path):
    cases = [
        ds.gen_tree(3, 3),
        ds.gen_grid(4, 6),
        ds.gen_whisker(5, 3, 2),
        ds.gen_random_connected(20, 0.2, seed=11),
        ds.build_graph([("a", "b"), ("c", "d"), ("b", "d")]),
        ds.build_graph([("hub", "x"), ("hub", "y"), ("hub", "z")]),
    ]
    for i, g in enumerate(cases):
        path = tmp_path / f"g{i}.edges"
        ds.write_graph(g, path)
        back = ds.parse_edge_list(path)
        assert back == g  # identical labels, ids, and adjacency


def test_write_graph_deterministic_bytes(tmp_path):
    g = ds.gen_random_connected(15, 0.3, seed=9)
    p1, p2 = tmp_path / "a.edges", tmp_path / "b.edges"
    ds.write_graph(g, p1)
    ds.write_graph(g, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_format_cell():
    assert format_cell(None) == ""
    assert format_cell(3) == "3"
    assert format_cell(np.int64(7)) == "7"
    assert format_cell(0.5) == "0.5"
    assert format_cell(-0.0) == "0"
    assert format_cell(0.000503457616) == "0.000503458"
    assert format_cell(1 / 3) == "0.333333"
    assert format_cell("x") == "x"


def test_write_csv_round_trip_six_significant_digits(tmp_path):
    # aggregate-report style row: four counts then four averages
    row = (49, 197, 0, 6, -28.912345678, 0.050612345, 36.81234567, 0.082923456)
    path = tmp_path / "agg.csv"
    ds.write_csv(path, ("a", "b", "c", "d", "e", "f", "g", "h"), [row])
    lines = path.read_text().splitlines()
    assert len(lines) == 2  # header exactly once
    assert lines[0] == "a,b,c,d,e,f,g,h"
    parsed = [float(x) for x in lines[1].split(",")]
    for orig, back in zip(row, parsed):
        assert back == float(f"{float(orig):.6g}")


def test_write_csv_lf_endings(tmp_path):
    path = tmp_path / "rows.csv"
    ds.write_csv(path, ("x",), [(1,), (2,)])
    data = path.read_bytes()
    assert b"\r" not in data
    assert data == b"x\n1\n2\n"
