"""Command-line front end producing deterministic, plot-ready CSV files.

Subcommands:
  gen            write a generated graph as a canonical edge list
  gap            traditional and boundary-conditioned spectral gaps per graph
  tree-converge  analytic (and, where feasible, numeric) tree gaps by depth
  grow           gaps of radius-grown subgraphs around the graph's 1-median
  cluster-sweep  full cut-size sweep comparing the two clustering methods

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.
All outputs land under --out with fixed file names; rerunning a command with
identical inputs, flags, and seed reproduces the files byte for byte.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import clustering, ingest
from .errors import DataError, DirspecError, NumericalError
from .graph import (
    Graph,
    ball,
    eccentricity,
    induced_subgraph,
    is_connected,
    largest_component,
    one_median,
    resolve_boundary,
)
from .ingest import write_csv, write_graph
from .spectral import dirichlet_gap, spectral_gap
from .tree_spectrum import dirichlet_gap_analytic

NUMERIC_TREE_LIMIT = 2048
CLI_BOUNDARIES = ("degree-one", "leaves", "grid-perimeter")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 instead of argparse's 2
        raise UsageError(message)


def parse_generator_spec(spec: str, seed: int = 0) -> Graph:
    """Build a graph from a spec string: tree:DxL, grid:RxC, whisker:KxWxL, random:NxP."""
    try:
        kind, _, rest = spec.partition(":")
        parts = rest.split("x")
        if kind == "tree":
            d, depth = (int(p) for p in parts)
            return ingest.gen_tree(d, depth)
        if kind == "grid":
            rows, cols = (int(p) for p in parts)
            return ingest.gen_grid(rows, cols)
        if kind == "whisker":
            core, count, length = (int(p) for p in parts)
            return ingest.gen_whisker(core, count, length)
        if kind == "random":
            n, p = parts
            return ingest.gen_random_connected(int(n), float(p), seed)
    except (ValueError, TypeError) as e:
        raise UsageError(f"bad generator spec {spec!r}: {e}") from e
    raise UsageError(f"bad generator spec {spec!r}: unknown kind")


def _load_graph(args, path: str | None = None) -> Graph:
    if path is not None:
        g = ingest.parse_edge_list(path)
    elif getattr(args, "gen", None):
        g = parse_generator_spec(args.gen, args.seed)
    else:
        raise UsageError("provide --input or --gen")
    if not is_connected(g) and not args.keep_disconnected:
        print("note: input disconnected; using largest component", file=sys.stderr)
        g = largest_component(g)
    return g


def _outpath(args, name: str) -> str:
    os.makedirs(args.out, exist_ok=True)
    return os.path.join(args.out, name)


def cmd_gen(args) -> int:
    g = parse_generator_spec(args.spec, args.seed)
    path = _outpath(args, "graph.edges")
    write_graph(g, path)
    print(f"wrote {path} ({g.node_count} nodes, {g.edge_count} edges)")
    return 0


def cmd_gap(args) -> int:
    sources: list[str | None] = list(args.input) if args.input else [None]
    rows = []
    for src in sources:
        g = _load_graph(args, src)
        b = resolve_boundary(g, args.boundary)
        rows.append(
            (
                g.node_count,
                g.edge_count,
                len(b.nodes),
                spectral_gap(g, tol=args.tol, use_largest_component=not args.keep_disconnected),
                dirichlet_gap(g, b, tol=args.tol),
            )
        )
    path = _outpath(args, "gap.csv")
    write_csv(path, ("n", "m", "boundary_size", "traditional_gap", "dirichlet_gap"), rows)
    print(f"wrote {path}")
    return 0


def cmd_tree_converge(args) -> int:
    if args.degree < 3:
        raise UsageError("tree-converge requires --degree >= 3")
    rows = []
    for levels in range(1, args.max_levels + 1):
        analytic = dirichlet_gap_analytic(args.degree, levels)
        numeric = None
        if ingest.tree_node_count(args.degree, levels + 1) <= NUMERIC_TREE_LIMIT:
            tree = ingest.gen_tree(args.degree, levels + 1)
            numeric = dirichlet_gap(tree, resolve_boundary(tree, "leaves"), tol=args.tol)
        rows.append((levels, analytic, numeric))
    path = _outpath(args, "tree_converge.csv")
    write_csv(path, ("L", "analytic_gap", "numeric_gap"), rows)
    print(f"wrote {path}")
    return 0


def cmd_grow(args) -> int:
    src = args.input[0] if args.input else None
    g = _load_graph(args, src)
    center = one_median(g)
    rows = []
    for radius in range(1, eccentricity(g, center) + 1):
        members = ball(g, center, radius)
        sub = induced_subgraph(g, members)
        trad = diri = None
        try:
            trad = spectral_gap(sub, tol=args.tol)
        except DirspecError:
            pass
        try:
            b = resolve_boundary(sub, "radius-cut", parent=g, parent_nodes=members)
            diri = dirichlet_gap(sub, b, tol=args.tol)
        except DirspecError:
            pass
        rows.append((radius, sub.node_count, trad, diri))
    path = _outpath(args, "grow.csv")
    write_csv(path, ("r", "n_sub", "traditional_gap", "dirichlet_gap"), rows)
    print(f"wrote {path}")
    return 0


def cmd_cluster_sweep(args) -> int:
    src = args.input[0] if args.input else None
    g = _load_graph(args, src)
    b = resolve_boundary(g, args.boundary)
    sizes = None
    if args.sizes:
        try:
            sizes = [int(s) for s in args.sizes.split(",") if s]
        except ValueError as e:
            raise UsageError(f"bad --sizes list: {e}") from e
    report = clustering.sweep(g, b, tol=args.tol, sizes=sizes)
    sizes_path = _outpath(args, "sweep_sizes.csv")
    write_csv(sizes_path, clustering.SIZES_HEADER, clustering.size_rows(report))
    agg_path = _outpath(args, "sweep_aggregate.csv")
    write_csv(agg_path, clustering.AGGREGATE_HEADER, [clustering.aggregate_row(report)])
    if args.emit_cuts:
        for row, cut in zip(report.rows, report.dirichlet_cuts):
            members = sorted(cut)
            inset = set(members)
            lines = [
                f"{g.labels[u]} {g.labels[v]}"
                for u in members
                for v in g.neighbors(u)
                if v > u and int(v) in inset
            ]
            with open(_outpath(args, f"cut_{row.k}.edges"), "w", encoding="utf-8", newline="") as f:
                f.write("\n".join(lines) + ("\n" if lines else ""))
    print(f"wrote {sizes_path} and {agg_path}")
    return 0


def _add_common(p: argparse.ArgumentParser, with_boundary: bool = True) -> None:
    p.add_argument("--tol", type=float, default=1e-8, help="eigensolver tolerance")
    p.add_argument("--seed", type=int, default=0, help="seed for random generators")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument(
        "--keep-disconnected",
        action="store_true",
        help="do not reduce disconnected inputs to their largest component",
    )
    if with_boundary:
        p.add_argument("--boundary", choices=CLI_BOUNDARIES, default="degree-one")


def _add_source(p: argparse.ArgumentParser, multiple: bool = False) -> None:
    p.add_argument(
        "--input",
        nargs="+" if multiple else 1,
        default=None,
        metavar="EDGELIST",
        help="edge-list file(s)",
    )
    p.add_argument("--gen", default=None, metavar="SPEC", help="generator spec, e.g. grid:100x100")


def build_parser() -> _Parser:
    parser = _Parser(prog="dirspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("spec", help="tree:DxL | grid:RxC | whisker:KxWxL | random:NxP")
    _add_common(p, with_boundary=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("gap", help="spectral gaps of one or more graphs")
    _add_source(p, multiple=True)
    _add_common(p)
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("tree-converge", help="tree gap convergence by interior depth")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-levels", type=int, required=True)
    _add_common(p, with_boundary=False)
    p.set_defaults(func=cmd_tree_converge)

    p = sub.add_parser("grow", help="gaps of radius-grown subgraphs from the 1-median")
    _add_source(p)
    _add_common(p, with_boundary=False)
    p.set_defaults(func=cmd_grow)

    p = sub.add_parser("cluster-sweep", help="cut-size sweep comparing both methods")
    _add_source(p)
    _add_common(p)
    p.add_argument("--sizes", default=None, help="comma-separated cut sizes to keep")
    p.add_argument(
        "--emit-cuts",
        action="store_true",
        help="also write each recorded cut's induced edge list",
    )
    p.set_defaults(func=cmd_cluster_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except DataError as e:
        print(f"data error: {e}", file=sys.stderr)
        return 2
    except NumericalError as e:
        print(f"numerical error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
