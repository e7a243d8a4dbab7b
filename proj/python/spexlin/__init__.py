"""Spectral and extremal analysis of r-uniform hypergraphs.

Thin re-export of the compiled core: hypergraph model, adjacency-tensor
spectral radius, 2-shadow, Berge pattern detection, closed-form bounds, and
desk-scale extremal search.
"""

from ._core import (  # noqa: F401
    BergeEmbedding,
    BoundReport,
    CapacityError,
    Hypergraph,
    InputError,
    Multigraph,
    Pattern,
    SearchResult,
    SpectralResult,
    WalkTable,
    __version__,
    apply_adjacency,
    avg_degree_lower,
    c3free_neighborhood_structure,
    canonical_form,
    check_hm_bipartite,
    check_shadow_bound,
    comb_ineq_check,
    components,
    contains_berge,
    contains_exact_berge_kst,
    count_walks,
    cross,
    degree_quadratic_check,
    enumerate_berge_family,
    enumerate_classes,
    enumerate_extremal,
    ex_kst_c3_bound,
    ex_kst_c3_holds_exact,
    expansion,
    fact_root1,
    fact_root1_applicable,
    fact_root2,
    fit_min_Q,
    generalized_binomial,
    hm_edge_bound,
    induced,
    is_connected,
    is_family_free,
    is_isomorphic,
    k2t_degree_hypothesis,
    load_hypergraph,
    multigraph_spectral_radius,
    neighborhoods,
    parse_hypergraph,
    quadratic_positive_root,
    random_linear,
    residual,
    spectral_radius,
    spex_k2t_bound,
    spex_kst_c3_bound,
    to_json,
    to_text,
    two_shadow,
    verify_corpus,
    walk_quadratic_check,
)
