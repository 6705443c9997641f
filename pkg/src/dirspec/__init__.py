"""Spectral analysis of network graphs under boundary conditions.

Computes traditional and Dirichlet (boundary-restricted) spectral gaps,
Cheeger ratios and brute-force constants, closed-form regular-tree spectra,
and two-eigenvector sweep-cut clustering comparisons.
"""

from .cheeger import (
    CheegerReport,
    brute_force_cheeger_constant,
    brute_force_local_cheeger_constant,
    cheeger_ratio,
    infinite_tree_cheeger_constant,
    local_cheeger_ratio,
)
from .clustering import (
    CutRecord,
    Embedding,
    SweepReport,
    SweepRow,
    compare_report,
    embed,
    evaluate_cut,
    rank_nodes,
    reattach_boundary,
    sweep,
    two_means,
)
from .errors import DataError, DirspecError, NumericalError
from .graph import (
    BoundarySpec,
    CleaningReport,
    Graph,
    NodeSet,
    ball,
    build_graph,
    components,
    edge_boundary,
    eccentricity,
    induced_subgraph,
    is_connected,
    largest_component,
    one_median,
    resolve_boundary,
    volume,
)
from .ingest import (
    gen_grid,
    gen_random_connected,
    gen_tree,
    gen_whisker,
    parse_edge_list,
    tree_node_count,
    write_csv,
    write_graph,
)
from .spectral import (
    EigenResult,
    SymmetricMatrix,
    build_dirichlet_laplacian,
    build_normalized_laplacian,
    dirichlet_gap,
    smallest_eigenpairs,
    spectral_gap,
)
from .tree_spectrum import (
    TreeSpectrumResult,
    dirichlet_gap_analytic,
    infinite_tree_gap,
    sector_family_eigenvalues,
    symmetric_family_roots,
    tree_spectrum,
)

__version__ = "0.1.0"
