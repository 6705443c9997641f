"""Cheeger ratios and exact (brute-force) Cheeger constants on small graphs.

The global ratio of a cut S is e(S, ~S) / min(vol S, vol ~S); the local
variant, used with a designated boundary, is e(T, ~T) / vol(T) for sets T
that avoid the boundary.  Brute-force minimization enumerates all subsets
with bitmask arithmetic, comparing ratios exactly as integer fractions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DataError
from .graph import BoundarySpec, Graph, NodeSet, edge_boundary, volume

BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class CheegerReport:
    """A Cheeger value with the subset achieving it."""

    value: float
    witness: NodeSet
    kind: str  # global-ratio | global-constant | local-ratio | local-constant


def infinite_tree_cheeger_constant(degree: int) -> int:
    """Analytic Cheeger constant of the infinite regular tree; recorded, not computed."""
    if degree < 2:
        raise DataError("tree degree must be >= 2")
    return degree - 2


def cheeger_ratio(g: Graph, s: NodeSet) -> float:
    """e(S, ~S) / min(vol S, vol ~S) for a nonempty proper subset S."""
    size = len(set(s))
    if size == 0 or size >= g.node_count:
        raise DataError("cheeger_ratio needs a nonempty proper subset")
    vol_s = volume(g, s)
    vol_rest = 2 * g.edge_count - vol_s
    return edge_boundary(g, s) / min(vol_s, vol_rest)


def local_cheeger_ratio(g: Graph, b: BoundarySpec, t: NodeSet) -> float:
    """e(T, ~T) / vol(T) for a nonempty T disjoint from the boundary."""
    t = frozenset(int(v) for v in t)
    if not t:
        raise DataError("local_cheeger_ratio needs a nonempty set")
    if t & b.nodes:
        raise DataError("set overlaps the boundary; local ratio is undefined there")
    return edge_boundary(g, t) / volume(g, t)


def _neighbor_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.node_count):
        m = 0
        for u in g.neighbors(v):
            m |= 1 << int(u)
        masks.append(m)
    return masks


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def brute_force_cheeger_constant(g: Graph, max_n: int = BRUTE_FORCE_CAP) -> CheegerReport:
    """Exact minimum Cheeger ratio over all nonempty proper subsets.

    Enumeration is 2^n; ties break to the lexicographically smallest
    membership sequence.
    """
    n = g.node_count
    if n > max_n:
        raise DataError(f"graph too large for brute force ({n} > {max_n})")
    deg = [int(d) for d in g.degree]
    nbr = _neighbor_masks(g)
    total_vol = 2 * g.edge_count

    size = 1 << n
    vol = [0] * size
    within = [0] * size  # doubled count of edges inside the subset
    best_e = best_den = 0
    best_mask = -1
    for s in range(1, size - 1):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        vol[s] = vol[rest] + deg[low]
        within[s] = within[rest] + 2 * (nbr[low] & rest).bit_count()
        cut = vol[s] - within[s]
        den = min(vol[s], total_vol - vol[s])
        if best_mask < 0 or cut * best_den < best_e * den:
            best_e, best_den, best_mask = cut, den, s
        elif cut * best_den == best_e * den and _lex_key(s) < _lex_key(best_mask):
            best_mask = s
    return CheegerReport(
        value=best_e / best_den,
        witness=frozenset(_lex_key(best_mask)),
        kind="global-constant",
    )


def brute_force_local_cheeger_constant(
    g: Graph, b: BoundarySpec, max_n: int = BRUTE_FORCE_CAP
) -> CheegerReport:
    """Exact minimum local ratio over all nonempty subsets of the interior."""
    interior = [int(v) for v in b.interior(g)]
    m = len(interior)
    if m == 0:
        raise DataError("empty interior")
    if m > max_n:
        raise DataError(f"interior too large for brute force ({m} > {max_n})")
    deg = [int(g.degree[v]) for v in interior]
    full_nbr = _neighbor_masks(g)
    pos = {v: i for i, v in enumerate(interior)}
    # neighbor masks re-indexed to interior positions, interior-interior edges only
    nbr = []
    for v in interior:
        mask = 0
        for u in g.neighbors(v):
            j = pos.get(int(u))
            if j is not None:
                mask |= 1 << j
        nbr.append(mask)

    size = 1 << m
    vol = [0] * size
    within = [0] * size
    best_e = best_den = 0
    best_mask = -1
    for s in range(1, size):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        vol[s] = vol[rest] + deg[low]
        within[s] = within[rest] + 2 * (nbr[low] & rest).bit_count()
        cut = vol[s] - within[s]
        den = vol[s]
        if best_mask < 0 or cut * best_den < best_e * den:
            best_e, best_den, best_mask = cut, den, s
        elif cut * best_den == best_e * den and _lex_key(s) < _lex_key(best_mask):
            best_mask = s
    witness = frozenset(interior[i] for i in _lex_key(best_mask))
    return CheegerReport(value=best_e / best_den, witness=witness, kind="local-constant")
