"""G-Wishart normalising constants."""

from ._gwnc import (
    ConvergenceError,
    Graph,
    InputError,
    NumericalError,
    approx_ratio,
    chordal_constant,
    clique_decomposition,
    cycle4_identity,
    fourier_constant,
    iris_table,
    is_chordal,
    isserlis,
    isserlis_full,
    log_multigamma,
    maximal_cliques,
    mc_constant,
    nonchordal_graphs_4,
    path4_identity,
    pd_complete,
    perfect_elimination_ordering,
    roverato_estimate,
    stirling_rel_error,
    true_ratio_c4,
)

__all__ = [
    "ConvergenceError",
    "Graph",
    "InputError",
    "NumericalError",
    "approx_ratio",
    "chordal_constant",
    "clique_decomposition",
    "cycle4_identity",
    "fourier_constant",
    "iris_table",
    "is_chordal",
    "isserlis",
    "isserlis_full",
    "log_multigamma",
    "maximal_cliques",
    "mc_constant",
    "nonchordal_graphs_4",
    "path4_identity",
    "pd_complete",
    "perfect_elimination_ordering",
    "roverato_estimate",
    "stirling_rel_error",
    "true_ratio_c4",
]
