"""Two-eigenvector spectral clustering, sweep cuts, and method comparison.

Both the boundary-conditioned and the traditional pipeline embed nodes by the
eigenvectors of the two smallest eigenvalues, split them with deterministic
2-means, rank every node by its distance difference to the two centers, and
evaluate the nested prefix cuts of that ranking.  The sweep pairs the two
methods size-for-size and aggregates the comparison.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .cheeger import cheeger_ratio
from .errors import DataError, NumericalError
from .graph import BoundarySpec, Graph, NodeSet, components
from .spectral import (
    SymmetricMatrix,
    build_dirichlet_laplacian,
    build_normalized_laplacian,
    smallest_eigenpairs,
)

logger = logging.getLogger(__name__)

KMEANS_MAX_ROUNDS = 100


@dataclass(frozen=True)
class Embedding:
    """Per-node 2D coordinates from the two smallest eigenvectors."""

    node_ids: np.ndarray
    coords: np.ndarray
    eigenvalues: np.ndarray


@dataclass(frozen=True)
class CutRecord:
    size: int
    nodes: NodeSet
    h: float
    c: int
    method: str  # dirichlet | traditional


def evaluate_cut(g: Graph, nodes: Iterable[int], method: str) -> CutRecord:
    """Score one cut: its Cheeger ratio and induced component count."""
    members = frozenset(int(v) for v in nodes)
    return CutRecord(
        size=len(members),
        nodes=members,
        h=cheeger_ratio(g, members),
        c=components(g, members),
        method=method,
    )


@dataclass(frozen=True)
class SweepRow:
    k: int
    h_d: float
    c_d: int
    h_t: float
    c_t: int


@dataclass(frozen=True)
class SweepReport:
    """Size-paired cut comparison plus the four-category aggregate."""

    rows: tuple[SweepRow, ...]
    dirichlet_cuts: tuple[NodeSet, ...]  # aligned with rows
    cat_le_le: int
    cat_le_gt: int
    cat_gt_le: int
    cat_gt_gt: int
    avg_dc: float
    avg_dh: float
    avg_ct: float
    avg_ht: float
    skipped_sizes: tuple[int, ...]


def embed(m: SymmetricMatrix, tol: float = 1e-8) -> Embedding:
    """Coordinates from the eigenvectors of the two smallest eigenvalues.

    Each eigenvector is flipped so its first nonzero component (in index_map
    order) is positive, making the embedding deterministic.
    """
    if m.n < 2:
        raise DataError("embedding requires matrix dimension >= 2")
    res = smallest_eigenpairs(m, k=2, tol=tol)
    coords = res.eigenvectors.copy()
    for j in range(2):
        col = coords[:, j]
        nz = np.flatnonzero(col != 0.0)
        if nz.size and col[nz[0]] < 0:
            coords[:, j] = -col
    return Embedding(m.index_map.copy(), coords, res.eigenvalues.copy())


def two_means(emb: Embedding) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic 2-means over the embedding.

    Centers start at the points with minimum and maximum second-eigenvector
    coordinate; Lloyd rounds run until the assignment repeats (cap 100).
    Equidistant points stay with the first center.
    """
    pts = emb.coords
    if (pts == pts[0]).all():
        raise NumericalError("degenerate embedding: all points identical")
    centers = np.array([pts[int(np.argmin(pts[:, 1]))], pts[int(np.argmax(pts[:, 1]))]])
    assign: np.ndarray | None = None
    for _ in range(KMEANS_MAX_ROUNDS):
        d0 = ((pts - centers[0]) ** 2).sum(axis=1)
        d1 = ((pts - centers[1]) ** 2).sum(axis=1)
        new_assign = (d1 < d0).astype(np.int64)
        if assign is not None and (new_assign == assign).all():
            break
        assign = new_assign
        for idx in (0, 1):
            sel = pts[assign == idx]
            if len(sel):
                centers[idx] = sel.mean(axis=0)
    assert assign is not None
    return centers, assign


def rank_nodes(
    g: Graph, emb: Embedding, centers: np.ndarray, assign: np.ndarray
) -> np.ndarray:
    """Node ids sorted by (distance to the small-volume center minus distance
    to the other), ascending; ties break by node id.  Prefixes are the cuts."""
    vols = [int(g.degree[emb.node_ids[assign == i]].sum()) for i in (0, 1)]
    if vols[0] < vols[1]:
        a = 0
    elif vols[1] < vols[0]:
        a = 1
    else:
        a = int(assign[0])  # tie: the cluster holding the lowest node id
    d_a = np.linalg.norm(emb.coords - centers[a], axis=1)
    d_b = np.linalg.norm(emb.coords - centers[1 - a], axis=1)
    order = np.lexsort((emb.node_ids, d_a - d_b))
    return emb.node_ids[order]


def reattach_boundary(g: Graph, b: BoundarySpec, interior_cut: Iterable[int]) -> NodeSet:
    """Pull each boundary node into the cut when most of its interior
    neighbors are inside; exact ties and neighbor-less nodes stay outside."""
    cut = set(int(v) for v in interior_cut)
    if cut & b.nodes:
        raise DataError("interior cut contains boundary nodes")
    added = []
    for v in sorted(b.nodes):
        interior_nbrs = [int(u) for u in g.neighbors(v) if int(u) not in b.nodes]
        inside = sum(1 for u in interior_nbrs if u in cut)
        if 2 * inside > len(interior_nbrs):
            added.append(v)
    return frozenset(cut | set(added))


def _ranking(g: Graph, m: SymmetricMatrix, tol: float) -> np.ndarray:
    e = embed(m, tol)
    centers, assign = two_means(e)
    return rank_nodes(g, e, centers, assign)


def sweep(
    g: Graph,
    b: BoundarySpec,
    tol: float = 1e-8,
    sizes: Sequence[int] | None = None,
) -> SweepReport:
    """Full cut-size sweep comparing boundary-conditioned and traditional cuts.

    For each interior prefix, the boundary is reattached and the resulting
    size is matched by a traditional prefix cut of the same size; duplicate
    sizes keep the first occurrence.
    """
    n = g.node_count
    interior = b.interior(g)
    if interior.size < 2:
        raise DataError("sweep requires at least two interior nodes")

    order_d = _ranking(g, build_dirichlet_laplacian(g, b), tol)
    order_t = _ranking(g, build_normalized_laplacian(g), tol)

    wanted = set(int(s) for s in sizes) if sizes is not None else None
    rows: list[SweepRow] = []
    cuts: list[NodeSet] = []
    seen: set[int] = set()
    skipped: list[int] = []
    for j in range(1, interior.size):
        cut = reattach_boundary(g, b, order_d[:j])
        k = len(cut)
        if k == 0 or k == n:
            skipped.append(k)
            continue
        if k in seen:
            skipped.append(k)
            continue
        seen.add(k)
        if wanted is not None and k not in wanted:
            continue
        d_rec = evaluate_cut(g, cut, "dirichlet")
        t_rec = evaluate_cut(g, order_t[:k], "traditional")
        rows.append(SweepRow(k=k, h_d=d_rec.h, c_d=d_rec.c, h_t=t_rec.h, c_t=t_rec.c))
        cuts.append(d_rec.nodes)
    if skipped:
        logger.debug("sweep skipped duplicate/degenerate sizes: %s", skipped)
    if not rows:
        raise DataError("sweep produced no cuts (size filter too strict?)")

    le_le = le_gt = gt_le = gt_gt = 0
    for r in rows:
        if r.c_d <= r.c_t:
            if r.h_d <= r.h_t:
                le_le += 1
            else:
                le_gt += 1
        else:
            if r.h_d <= r.h_t:
                gt_le += 1
            else:
                gt_gt += 1
    count = len(rows)
    return SweepReport(
        rows=tuple(rows),
        dirichlet_cuts=tuple(cuts),
        cat_le_le=le_le,
        cat_le_gt=le_gt,
        cat_gt_le=gt_le,
        cat_gt_gt=gt_gt,
        avg_dc=sum(r.c_d - r.c_t for r in rows) / count,
        avg_dh=sum(r.h_d - r.h_t for r in rows) / count,
        avg_ct=sum(r.c_t for r in rows) / count,
        avg_ht=sum(r.h_t for r in rows) / count,
        skipped_sizes=tuple(skipped),
    )


SIZES_HEADER = ("k", "h_D", "c_D", "h_T", "c_T")
AGGREGATE_HEADER = (
    "cat_le_le",
    "cat_le_gt",
    "cat_gt_le",
    "cat_gt_gt",
    "avg_dc",
    "avg_dh",
    "avg_cT",
    "avg_hT",
)


def size_rows(report: SweepReport) -> list[tuple]:
    return [(r.k, r.h_d, r.c_d, r.h_t, r.c_t) for r in report.rows]


def aggregate_row(report: SweepReport) -> tuple:
    return (
        report.cat_le_le,
        report.cat_le_gt,
        report.cat_gt_le,
        report.cat_gt_gt,
        report.avg_dc,
        report.avg_dh,
        report.avg_ct,
        report.avg_ht,
    )


def compare_report(report: SweepReport) -> tuple[list[tuple], tuple]:
    """Per-size scatter rows (k, h_D - h_T, c_D - c_T) plus the aggregate row."""
    if not report.rows:
        raise DataError("empty sweep report")
    scatter = [(r.k, r.h_d - r.h_t, r.c_d - r.c_t) for r in report.rows]
    return scatter, aggregate_row(report)
