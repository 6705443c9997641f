"""Edge-list parsing, synthetic graph generators, and deterministic file writers.

Edge-list format: UTF-8 text, one edge per line as two whitespace-separated
labels; blank lines and lines starting with '#' are ignored.  CSV output uses
',' separators, '.' decimal points, LF line endings, and floats printed with
6 significant digits.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

import numpy as np

from .errors import DataError
from .graph import Graph, build_graph, is_connected

SIZE_GUARD = 10_000_000


def parse_edge_list(path: str | os.PathLike) -> Graph:
    """Parse a plain edge-list file into a canonical Graph."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = f.readlines()
    except OSError as e:
        raise DataError(f"cannot read {path}: {e}") from e

    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise DataError(
                f"{path}: line {lineno}: expected two tokens 'u v', got {len(tokens)}"
            )
        pairs.append((tokens[0], tokens[1]))
    if not pairs:
        raise DataError(f"{path}: empty edge list")
    return build_graph(pairs)


def tree_node_count(degree: int, depth: int) -> int:
    """Node count of the regular tree produced by :func:`gen_tree`."""
    if degree == 2:
        return 1 + 2 * depth
    return 1 + degree * ((degree - 1) ** depth - 1) // (degree - 2)


def _check_size(n: int) -> None:
    if n > SIZE_GUARD:
        raise DataError(f"generator output too large ({n} nodes > {SIZE_GUARD})")


def gen_tree(degree: int, depth: int) -> Graph:
    """Regular tree: root has `degree` children, other internal nodes degree-1
    children, so every interior node has full degree; leaves sit at `depth` hops."""
    if degree < 2 or depth < 1:
        raise DataError("gen_tree requires degree >= 2 and depth >= 1")
    _check_size(tree_node_count(degree, depth))
    edges: list[tuple[str, str]] = []
    level = [0]
    next_id = 1
    for lev in range(depth):
        fanout = degree if lev == 0 else degree - 1
        new_level = []
        for parent in level:
            for _ in range(fanout):
                edges.append((str(parent), str(next_id)))
                new_level.append(next_id)
                next_id += 1
        level = new_level
    return build_graph(edges)


def gen_grid(rows: int, cols: int) -> Graph:
    """4-neighbor lattice with rows*cols nodes; node (r, c) gets label str(r*cols+c)."""
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise DataError("gen_grid requires rows*cols >= 2")
    _check_size(rows * cols)
    edges: list[tuple[str, str]] = []
    # emit each node's up/left edges so dense ids coincide with labels
    for k in range(1, rows * cols):
        r, c = divmod(k, cols)
        if c > 0:
            edges.append((str(k - 1), str(k)))
        if r > 0:
            edges.append((str(k - cols), str(k)))
    return build_graph(edges)


def gen_whisker(core_size: int, whisker_count: int, whisker_len: int) -> Graph:
    """Clique core with pendant paths (whiskers) attached round-robin to core nodes."""
    if core_size < 3 or whisker_count < 1 or whisker_len < 1:
        raise DataError(
            "gen_whisker requires core_size >= 3 and whisker parameters >= 1"
        )
    _check_size(core_size + whisker_count * whisker_len)
    edges: list[tuple[str, str]] = []
    for j in range(1, core_size):
        for i in range(j):
            edges.append((str(i), str(j)))
    next_id = core_size
    for w in range(whisker_count):
        prev = w % core_size
        for _ in range(whisker_len):
            edges.append((str(prev), str(next_id)))
            prev = next_id
            next_id += 1
    return build_graph(edges)


def gen_random_connected(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p), redrawn until all n nodes appear and the graph connects."""
    if n < 2 or n > 10_000:
        raise DataError("gen_random_connected requires 2 <= n <= 10000")
    if not 0 < p <= 1:
        raise DataError("gen_random_connected requires 0 < p <= 1")
    rng = np.random.default_rng(seed)
    iu, iv = np.triu_indices(n, k=1)
    for _ in range(1000):
        pick = rng.random(iu.size) < p
        if not pick.any():
            continue
        pairs = [(str(int(u)), str(int(v))) for u, v in zip(iu[pick], iv[pick])]
        g = build_graph(pairs)
        if g.node_count == n and is_connected(g):
            return g
    raise DataError(f"could not draw a connected graph for n={n}, p={p}, seed={seed}")


def write_graph(g: Graph, path: str | os.PathLike) -> None:
    """Write a canonical edge list; parse_edge_list(write_graph(g)) reproduces g exactly.

    Edges are emitted in two blocks: first one introduction edge per node, ordered
    so labels first appear in dense-id order, then all remaining edges sorted.
    """
    introduced = np.zeros(g.node_count, dtype=bool)
    emitted: set[tuple[int, int]] = set()
    lines: list[str] = []
    for v in range(1, g.node_count):
        if introduced[v]:
            continue
        smaller = [int(u) for u in g.neighbors(v) if u < v]
        if smaller:
            u = min(smaller)
            lines.append(f"{g.labels[u]} {g.labels[v]}")
            emitted.add((u, v))
            introduced[u] = introduced[v] = True
        else:
            # first-seen id assignment guarantees v was introduced alongside v+1
            if v + 1 >= g.node_count or (v + 1) not in g.neighbors(v):
                raise DataError("graph ids are not in canonical first-seen order")
            lines.append(f"{g.labels[v]} {g.labels[v + 1]}")
            emitted.add((v, v + 1))
            introduced[v] = introduced[v + 1] = True
    eu, ev = g.edge_arrays
    for u, v in zip(eu, ev):
        if (int(u), int(v)) not in emitted:
            lines.append(f"{g.labels[u]} {g.labels[v]}")
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write("\n".join(lines) + "\n")
    except OSError as e:
        raise DataError(f"cannot write {path}: {e}") from e


def format_cell(value) -> str:
    """One CSV cell: floats at 6 significant digits, None as empty."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if v == 0.0:
            return "0"
        return f"{v:.6g}"
    return str(value)


def write_csv(path: str | os.PathLike, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    """Write a CSV with a single header row and LF line endings."""
    out = [",".join(header)]
    for row in rows:
        out.append(",".join(format_cell(x) for x in row))
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write("\n".join(out) + "\n")
    except OSError as e:
        raise DataError(f"cannot write {path}: {e}") from e
