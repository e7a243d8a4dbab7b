#pragma once

#include "spexlin/hypergraph.hpp"

namespace spexlin {

/// Hard cap for the exact relabeling search; beyond it a capacity_error is thrown.
inline constexpr Vertex kCanonicalMaxVertices = 12;

/// The lexicographically least edge list over all vertex relabelings,
/// found by branch-and-bound over label assignments with pruning on the
/// partially determined sorted edge list. Idempotent; exponential worst
/// case, intended for small n.
UniformHypergraph canonical_form(const UniformHypergraph& h);

/// True iff h's edge list already equals its canonical form. Cheaper than
/// canonical_form for rejects: the search aborts on the first improving
/// relabeling.
bool is_canonical(const UniformHypergraph& h);

/// Canonical-form equality; false on r or n mismatch.
bool is_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b);

}  // namespace spexlin
