from __future__ import annotations

import math

import pytest

import dirspec as ds
from dirspec.cli import main, parse_generator_spec


def read_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


def test_gen_command_tree(tmp_path):
    assert main(["gen", "tree:3x4", "--out", str(tmp_path)]) == 0
    g = ds.parse_edge_list(tmp_path / "graph.edges")
    assert g.node_count == 1 + 3 * (2**4 - 1) == 46


def test_gen_command_grid_and_whisker(tmp_path):
    assert main(["gen", "grid:2x2", "--out", str(tmp_path)]) == 0
    text = (tmp_path / "graph.edges").read_text()
    assert len(text.splitlines()) == 4

    assert main(["gen", "whisker:10x5x3", "--out", str(tmp_path)]) == 0
    g = ds.parse_edge_list(tmp_path / "graph.edges")
    assert g.node_count == 25
    assert int((g.degree == 1).sum()) == 5


def test_generator_spec_random_uses_seed():
    g1 = parse_generator_spec("random:20x0.2", seed=5)
    g2 = parse_generator_spec("random:20x0.2", seed=5)
    g3 = parse_generator_spec("random:20x0.2", seed=6)
    assert g1 == g2
    assert g1.labeled_edges() != g3.labeled_edges()


def test_gap_command_tree(tmp_path):
    rc = main(
        ["gap", "--gen", "tree:3x2", "--boundary", "leaves", "--out", str(tmp_path)]
    )
    assert rc == 0
    header, rows = read_csv(tmp_path / "gap.csv")
    assert header == ["n", "m", "boundary_size", "traditional_gap", "dirichlet_gap"]
    (row,) = rows
    assert [int(x) for x in row[:3]] == [10, 9, 6]
    assert float(row[4]) == pytest.approx(1 - 1 / math.sqrt(3), abs=1e-5)


def test_gap_command_multiple_inputs(tmp_path):
    for name, spec in (("a.edges", "tree:3x2"), ("b.edges", "whisker:5x2x2")):
        g = parse_generator_spec(spec)
        ds.write_graph(g, tmp_path / name)
    rc = main(
        [
            "gap",
            "--input",
            str(tmp_path / "a.edges"),
            str(tmp_path / "b.edges"),
            "--out",
            str(tmp_path),
        ]
    )
    assert rc == 0
    _, rows = read_csv(tmp_path / "gap.csv")
    assert len(rows) == 2
    assert int(rows[0][0]) == 10
    assert int(rows[1][0]) == 9


def test_gap_command_no_interior_exit_code(tmp_path):
    (tmp_path / "k2.edges").write_text("a b\n")
    rc = main(
        [
            "gap",
            "--input",
            str(tmp_path / "k2.edges"),
            "--boundary",
            "degree-one",
            "--out",
            str(tmp_path),
        ]
    )
    assert rc == 2


def test_usage_errors_exit_code(tmp_path):
    assert main(["gap", "--gen", "bogus:1x2", "--out", str(tmp_path)]) == 1
    assert main(["gap", "--gen", "grid:axb", "--out", str(tmp_path)]) == 1
    assert main(["gap", "--out", str(tmp_path)]) == 1  # no source
    assert main(["nonsense"]) == 1


def test_tree_converge_command(tmp_path):
    rc = main(
        ["tree-converge", "--degree", "3", "--max-levels", "8", "--out", str(tmp_path)]
    )
    assert rc == 0
    header, rows = read_csv(tmp_path / "tree_converge.csv")
    assert header == ["L", "analytic_gap", "numeric_gap"]
    assert len(rows) == 8
    analytic = [float(r[1]) for r in rows]
    assert all(b < a for a, b in zip(analytic, analytic[1:]))
    for r in rows:
        if r[2]:
            assert float(r[2]) == pytest.approx(float(r[1]), abs=1e-6)


def test_tree_converge_numeric_column_cutoff(tmp_path):
    rc = main(
        ["tree-converge", "--degree", "3", "--max-levels", "10", "--out", str(tmp_path)]
    )
    assert rc == 0
    _, rows = read_csv(tmp_path / "tree_converge.csv")
    # trees beyond 2048 nodes leave the numeric field empty (depth 11: 3070+ nodes)
    present = [bool(r[2]) for r in rows]
    assert present == [ds.tree_node_count(3, L + 1) <= 2048 for L in range(1, 11)]
    assert not all(present) and any(present)


def test_grow_command_grid(tmp_path):
    rc = main(["grow", "--gen", "grid:15x15", "--out", str(tmp_path)])
    assert rc == 0
    header, rows = read_csv(tmp_path / "grow.csv")
    assert header == ["r", "n_sub", "traditional_gap", "dirichlet_gap"]
    g = ds.gen_grid(15, 15)
    assert len(rows) == ds.eccentricity(g, ds.one_median(g)) == 14
    diri = [float(r[3]) for r in rows if r[3]]
    assert all(b < a for a, b in zip(diri, diri[1:]))


def test_grow_command_full_radius_matches_gap(tmp_path):
    rc = main(["grow", "--gen", "whisker:6x3x2", "--out", str(tmp_path)])
    assert rc == 0
    _, rows = read_csv(tmp_path / "grow.csv")
    rc = main(
        ["gap", "--gen", "whisker:6x3x2", "--boundary", "degree-one", "--out", str(tmp_path)]
    )
    assert rc == 0
    _, gap_rows = read_csv(tmp_path / "gap.csv")
    last = rows[-1]
    assert int(last[1]) == 12
    assert float(last[2]) == float(gap_rows[0][3])
    assert float(last[3]) == float(gap_rows[0][4])


def test_cluster_sweep_command(tmp_path):
    args = [
        "cluster-sweep",
        "--gen",
        "whisker:10x4x2",
        "--boundary",
        "degree-one",
        "--out",
    ]
    assert main(args + [str(tmp_path / "r1")]) == 0
    header, rows = read_csv(tmp_path / "r1" / "sweep_sizes.csv")
    assert header == ["k", "h_D", "c_D", "h_T", "c_T"]
    assert len(rows) >= 5
    agg_header, agg_rows = read_csv(tmp_path / "r1" / "sweep_aggregate.csv")
    assert agg_header == [
        "cat_le_le",
        "cat_le_gt",
        "cat_gt_le",
        "cat_gt_gt",
        "avg_dc",
        "avg_dh",
        "avg_cT",
        "avg_hT",
    ]
    assert len(agg_rows) == 1
    assert sum(int(x) for x in agg_rows[0][:4]) == len(rows)

    # reruns are byte-identical
    assert main(args + [str(tmp_path / "r2")]) == 0
    for name in ("sweep_sizes.csv", "sweep_aggregate.csv"):
        assert (tmp_path / "r1" / name).read_bytes() == (tmp_path / "r2" / name).read_bytes()


def test_cluster_sweep_sizes_filter_and_cut_files(tmp_path):
    rc = main(
        [
            "cluster-sweep",
            "--gen",
            "whisker:10x4x2",
            "--sizes",
            "3,5",
            "--emit-cuts",
            "--out",
            str(tmp_path),
        ]
    )
    assert rc == 0
    _, rows = read_csv(tmp_path / "sweep_sizes.csv")
    kept = [int(r[0]) for r in rows]
    assert set(kept) <= {3, 5}
    for k in kept:
        assert (tmp_path / f"cut_{k}.edges").exists()


def test_keep_disconnected_flag(tmp_path):
    (tmp_path / "two.edges").write_text("a b\nb c\nc a\nx y\ny z\nz x\np q\n")
    base = ["gap", "--input", str(tmp_path / "two.edges"), "--out", str(tmp_path)]
    assert main(base) == 0  # reduced to largest component
    assert main(base + ["--keep-disconnected"]) == 3  # zero gap rejected
