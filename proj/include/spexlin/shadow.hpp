#pragma once

#include "spexlin/hypergraph.hpp"
#include "spexlin/multigraph.hpp"
#include "spexlin/report.hpp"
#include "spexlin/spectral.hpp"

namespace spexlin {

/// The 2-shadow: each hyperedge contributes a clique, pair multiplicities
/// count the hyperedges containing both endpoints. For linear input every
/// multiplicity is 1.
Multigraph two_shadow(const UniformHypergraph& h);

/// Spectral radius of the multigraph adjacency matrix, same shifted power
/// iteration and enclosure semantics as the tensor case, per component.
SpectralResult multigraph_spectral_radius(const Multigraph& g, const IterationOptions& opts = {});

/// Verifies rho(H) <= rho(shadow)/(r-1) + tol and reports both sides.
/// For connected H, params carry equality_is_regularity: whether
/// |rho(H) - rho(shadow)/(r-1)| <= tol coincides with regularity.
BoundReport check_shadow_bound(const UniformHypergraph& h, double tol = 1e-8,
                               const IterationOptions& opts = {});

/// True iff the shadow restricted to N(u) is a disjoint union of exactly
/// d(u) cliques on r-1 vertices each; the neighborhood shape forced at every
/// vertex of a linear hypergraph with no Berge triangle. Requires linear input.
bool c3free_neighborhood_structure(const UniformHypergraph& h, Vertex u);

}  // namespace spexlin
