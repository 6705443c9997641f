"""Normalized Laplacian assembly, boundary restriction, and verified eigensolves.

The normalized Laplacian has 1 on the diagonal and -1/sqrt(d_u d_v) for
adjacent nodes, so its spectrum lies in [0, 2].  Restricting rows and columns
to the interior (non-boundary) nodes, while keeping full-graph degrees in the
normalization, gives the boundary-conditioned operator whose smallest
eigenvalue is the Dirichlet spectral gap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh, splu

from .errors import DataError, NumericalError
from .graph import BoundarySpec, Graph, is_connected, largest_component

DENSE_LIMIT = 2048
SHIFT = -1e-4
EIGENVALUE_SLACK = 1e-9
ORTHONORMALITY_TOL = 1e-8


@dataclass(frozen=True)
class SymmetricMatrix:
    """Symmetric sparse operator with a map from matrix rows back to graph node ids."""

    matrix: sp.csr_matrix
    index_map: np.ndarray

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class EigenResult:
    """Ascending eigenvalues with per-pair residual norms and orthonormal eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residuals: np.ndarray
    tol: float


def build_normalized_laplacian(g: Graph) -> SymmetricMatrix:
    """Assemble I - D^{-1/2} A D^{-1/2} for the whole graph."""
    if g.node_count == 0:
        raise DataError("empty graph")
    if (g.degree == 0).any():
        raise DataError("isolated node: degree-normalized Laplacian is undefined")
    inv_sqrt = 1.0 / np.sqrt(g.degree.astype(float))
    scaled = g.adjacency_matrix.multiply(inv_sqrt[:, None]).multiply(inv_sqrt[None, :])
    lap = (sp.identity(g.node_count, format="csr") - scaled).tocsr()
    return SymmetricMatrix(lap, np.arange(g.node_count, dtype=np.int64))


def build_dirichlet_laplacian(g: Graph, b: BoundarySpec) -> SymmetricMatrix:
    """Restrict the normalized Laplacian to interior rows and columns.

    Degrees in the normalization stay the full-graph degrees: edges leading
    to the boundary still count, only the boundary rows/columns are removed.
    """
    interior = b.interior(g)
    if interior.size == 0:
        raise DataError("empty interior: boundary covers every node")
    full = build_normalized_laplacian(g)
    sub = full.matrix[interior][:, interior].tocsr()
    return SymmetricMatrix(sub, interior)


def _rayleigh_polish(
    a: sp.csr_matrix, x: np.ndarray, lam: float, target: float
) -> tuple[np.ndarray, float]:
    """Rayleigh-quotient iteration fallback when a returned pair misses tolerance."""
    n = a.shape[0]
    for _ in range(4):
        shifted = (a - lam * sp.identity(n, format="csr")).tocsc()
        try:
            lu = splu(shifted)
            y = lu.solve(x)
        except RuntimeError:
            break
        norm = np.linalg.norm(y)
        if not np.isfinite(norm) or norm == 0:
            break
        x = y / norm
        lam = float(x @ (a @ x))
        if np.linalg.norm(a @ x - lam * x) <= target:
            break
    return x, lam


def smallest_eigenpairs(
    m: SymmetricMatrix, k: int, tol: float = 1e-8, method: str = "auto"
) -> EigenResult:
    """The k algebraically smallest eigenpairs, with verified residuals.

    Dense full decomposition below DENSE_LIMIT; shift-inverted Lanczos with a
    fixed start vector above it, so repeated runs are deterministic.
    """
    a = m.matrix
    n = a.shape[0]
    if not 1 <= k <= n:
        raise DataError(f"need 1 <= k <= {n}, got k={k}")
    if tol <= 0:
        raise DataError("tolerance must be positive")
    if method == "auto":
        method = "dense" if n <= DENSE_LIMIT else "iterative"
    if method not in ("dense", "iterative"):
        raise DataError(f"unknown eigensolver method: {method!r}")

    if method == "dense":
        vals_all, vecs_all = scipy.linalg.eigh(a.toarray())
        vals = vals_all[:k].astype(float)
        vecs = np.ascontiguousarray(vecs_all[:, :k])
    else:
        if k >= n - 1:
            raise DataError("iterative path requires k < n-1; use method='dense'")
        shifted = (a - SHIFT * sp.identity(n, format="csr")).tocsc()
        lu = splu(shifted)
        op_inv = LinearOperator((n, n), matvec=lu.solve, dtype=float)
        v0 = np.full(n, 1.0 / np.sqrt(n))
        try:
            vals, vecs = eigsh(
                a,
                k=k,
                sigma=SHIFT,
                which="LM",
                v0=v0,
                tol=0,
                maxiter=10 * n,
                OPinv=op_inv,
            )
        except ArpackNoConvergence as e:
            achieved = float("inf")
            if len(e.eigenvalues):
                part = np.linalg.norm(
                    a @ e.eigenvectors - e.eigenvectors * e.eigenvalues, axis=0
                )
                achieved = float(part.max())
            raise NumericalError(
                f"eigensolver did not converge within budget: {len(e.eigenvalues)}/{k} "
                f"pairs, achieved residual {achieved:.3e}"
            ) from e
        order = np.argsort(vals)
        vals = vals[order].astype(float)
        vecs = np.ascontiguousarray(vecs[:, order])

    residuals = np.linalg.norm(a @ vecs - vecs * vals, axis=0)
    if method == "iterative" and (residuals > tol).any():
        for i in np.flatnonzero(residuals > tol):
            x, lam = _rayleigh_polish(a, vecs[:, i], float(vals[i]), 0.1 * tol)
            vecs[:, i] = x
            vals[i] = lam
        order = np.argsort(vals)
        vals = vals[order]
        vecs = vecs[:, order]
        residuals = np.linalg.norm(a @ vecs - vecs * vals, axis=0)

    if (residuals > tol).any():
        raise NumericalError(
            f"eigenpair residual {residuals.max():.3e} exceeds tolerance {tol:.3e}"
        )
    gram = vecs.T @ vecs
    ortho_err = np.abs(gram - np.eye(k)).max()
    if ortho_err > ORTHONORMALITY_TOL:
        raise NumericalError(f"eigenvectors not orthonormal (error {ortho_err:.3e})")
    lo, hi = -EIGENVALUE_SLACK, 2.0 + EIGENVALUE_SLACK
    if vals[0] < lo or vals[-1] > hi:
        raise NumericalError(
            f"unexpected spectrum: eigenvalues [{vals[0]:.3e}, {vals[-1]:.3e}] "
            f"outside [{lo:.0e}, 2+{EIGENVALUE_SLACK:.0e}]"
        )
    return EigenResult(vals, vecs, residuals, tol)


def spectral_gap(g: Graph, tol: float = 1e-8, use_largest_component: bool = True) -> float:
    """Second-smallest eigenvalue of the normalized Laplacian.

    Disconnected graphs are reduced to their largest component first unless
    the caller opts out, in which case a zero second eigenvalue is an error.
    """
    if use_largest_component and not is_connected(g):
        g = largest_component(g)
    res = smallest_eigenpairs(build_normalized_laplacian(g), k=2, tol=tol)
    if abs(res.eigenvalues[0]) > 1e-10 or res.eigenvalues[1] <= 1e-10:
        raise NumericalError(
            "unexpected spectrum: smallest eigenvalues "
            f"{res.eigenvalues[0]:.3e}, {res.eigenvalues[1]:.3e}"
        )
    return float(res.eigenvalues[1])


def dirichlet_gap(g: Graph, b: BoundarySpec, tol: float = 1e-8) -> float:
    """Smallest eigenvalue of the boundary-restricted Laplacian."""
    res = smallest_eigenpairs(build_dirichlet_laplacian(g, b), k=1, tol=tol)
    return float(res.eigenvalues[0])
