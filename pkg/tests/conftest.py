"""Shared graph fixtures and slow reference implementations used as oracles.

The reference functions here deliberately avoid the package's vectorized and
bitmask code paths: plain BFS over Python sets and subset enumeration with
exact fractions, so the fast implementations are checked against an
independent route.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction

import pytest

import dirspec as ds


@pytest.fixture
def two_triangle() -> ds.Graph:
    """Two triangles joined by one bridge edge c-d; no degree-1 nodes."""
    return ds.build_graph(
        [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f"), ("c", "d")]
    )


def path_graph(n: int) -> ds.Graph:
    return ds.build_graph([(str(i), str(i + 1)) for i in range(n - 1)])


def cycle_graph(n: int) -> ds.Graph:
    edges = [(str(i), str((i + 1) % n)) for i in range(n)]
    return ds.build_graph(edges)


def complete_graph(n: int) -> ds.Graph:
    return ds.build_graph([(str(i), str(j)) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> ds.Graph:
    return ds.build_graph([("hub", f"leaf{i}") for i in range(leaves)])


def slow_volume(g: ds.Graph, s) -> int:
    return sum(int(g.degree[v]) for v in set(s))


def slow_edge_boundary(g: ds.Graph, s) -> int:
    inside = set(s)
    return sum(1 for u in inside for v in g.neighbors(u) if int(v) not in inside)


def slow_components(g: ds.Graph, s) -> int:
    left = set(int(v) for v in s)
    count = 0
    while left:
        count += 1
        queue = deque([left.pop()])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                v = int(v)
                if v in left:
                    left.remove(v)
                    queue.append(v)
    return count


def slow_distance_sums(g: ds.Graph) -> list[int]:
    sums = []
    for src in range(g.node_count):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                v = int(v)
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        assert len(dist) == g.node_count, "disconnected graph in slow_distance_sums"
        sums.append(sum(dist.values()))
    return sums


def slow_cheeger_constant(g: ds.Graph) -> tuple[Fraction, tuple[int, ...]]:
    """Exact global Cheeger constant by subset enumeration with Fractions."""
    n = g.node_count
    total = 2 * g.edge_count
    best: Fraction | None = None
    witness: tuple[int, ...] = ()
    for size in range(1, n):
        for combo in itertools.combinations(range(n), size):
            cut = slow_edge_boundary(g, combo)
            vol = slow_volume(g, combo)
            h = Fraction(cut, min(vol, total - vol))
            if best is None or h < best or (h == best and combo < witness):
                best, witness = h, combo
    assert best is not None
    return best, witness


def slow_local_cheeger_constant(
    g: ds.Graph, interior
) -> tuple[Fraction, tuple[int, ...]]:
    """Exact local Cheeger constant over nonempty subsets of the interior."""
    interior = sorted(int(v) for v in interior)
    best: Fraction | None = None
    witness: tuple[int, ...] = ()
    for size in range(1, len(interior) + 1):
        for combo in itertools.combinations(interior, size):
            h = Fraction(slow_edge_boundary(g, combo), slow_volume(g, combo))
            if best is None or h < best or (h == best and combo < witness):
                best, witness = h, combo
    assert best is not None
    return best, witness


def random_graph_suite(count: int, n_range=(4, 10), seed_base: int = 1000):
    """Deterministic stream of seeded random connected graphs."""
    lo, hi = n_range
    span = hi - lo + 1
    graphs = []
    for i in range(count):
        n = lo + i % span
        p = 0.3 + 0.1 * ((i // span) % 5)
        graphs.append(ds.gen_random_connected(n, p, seed=seed_base + i))
    return graphs
