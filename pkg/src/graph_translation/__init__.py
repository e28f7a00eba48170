"""Isometric graph translation operators, their truncated-series
approximations, error bounds and localization analysis."""

from .approx import (
    ScaledMatrix,
    apply_adjacency_approx,
    apply_approx,
    apply_laplacian_approx,
    reach,
    scaled_matrix,
)
from .bounds import (
    BoundReport,
    MinOrder,
    corrected_kappa_R,
    corrected_total,
    dc_error_term,
    empirical_sup_error,
    kappa_C,
    kappa_R,
    kappa_S,
    lagrange_remainder_bound,
    alternating_tail,
    min_order_search,
    product_bound,
    total_bound_adjacency,
    total_bound_laplacian,
)
from .exact import ExactTranslation, apply_exact, build_exact, operator_matrix
from .graph import (
    DegreeData,
    Graph,
    GraphError,
    degree_data,
    generate,
    hop_distances,
    matrices,
    rho_G,
)
from .io import load_graph, load_signal
from .localization import LocalizationProfile, decay_report, impulse_profile, support_radius
from .spectral import (
    FrequencySet,
    SpectralBasis,
    SpectralError,
    eig_sym,
    frequencies,
    graph_basis,
    spectral_gap,
)

__version__ = "0.1.0"
