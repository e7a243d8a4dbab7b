#pragma once

#include "spexlin/berge.hpp"
#include "spexlin/hypergraph.hpp"
#include "spexlin/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spexlin {

/// Exhaustive enumeration caps; beyond them a capacity_error is thrown.
inline constexpr Vertex kEnumMaxVertices = 12;
inline constexpr std::size_t kEnumMaxCandidates = 5000;

struct SearchLimits {
    std::int64_t max_nodes = 0;   // 0 = unlimited
    std::int64_t max_millis = 0;  // 0 = unlimited
    std::size_t max_edges = 0;    // 0 = unlimited
};

/// Forbid Berge-K_{s,t} with the s-side in `head`; also constrains every
/// edge to meet `head` in exactly one vertex (hm-bipartite generation).
struct ExactForbidden {
    std::vector<Vertex> head;
    int s = 2;
    int t = 2;
};

enum class Objective { edges, spectral_radius };

struct SearchSpec {
    Vertex n = 0;
    int r = 2;
    bool linear_only = false;
    std::vector<PatternGraph> forbidden;  // Berge semantics
    std::optional<ExactForbidden> exact_forbidden;
    Objective objective = Objective::edges;
    SearchLimits limits;
    int threads = 1;
    /// When false, forbidden patterns stop pruning the tree and are only
    /// checked before a class is reported; the optimum must not change.
    bool prune_patterns = true;
};

struct SearchResult {
    double optimum = 0.0;
    std::vector<UniformHypergraph> witnesses;  // canonical, deduplicated, sorted
    std::int64_t nodes = 0;
    bool exhaustive = true;
};

/// Streams every isomorphism class compatible with the spec exactly once, in
/// lexicographic order of canonical edge lists along the generation tree
/// (orderly generation: a node is kept iff its edge list is canonical).
/// Return false from visit to stop early. Sequential; ignores spec.threads.
void enumerate_classes(const SearchSpec& spec,
                       const std::function<bool(const UniformHypergraph&)>& visit);

/// Maximizes the objective over all classes compatible with the spec.
/// Edge-count objective scans every class; spectral-radius objective
/// evaluates rho only on classes with no accepted extension (the maximum is
/// attained there by edge monotonicity). Honors spec.threads by splitting
/// the generation tree at a frontier into independent subtrees.
SearchResult enumerate_extremal(const SearchSpec& spec);

/// Repeatedly draws uniform r-subsets, keeping one iff the hypergraph stays
/// linear; stops at max_edges or after 50 * C(n, r) consecutive rejections.
/// Deterministic for a fixed seed.
UniformHypergraph random_linear(Vertex n, int r, std::uint64_t seed, std::size_t max_edges);

struct CorpusCheckResult {
    std::string name;
    std::int64_t checked = 0;
    std::int64_t skipped = 0;  // inputs the check does not apply to
    std::int64_t violations = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::optional<UniformHypergraph> first_violation;
};

struct CorpusReport {
    std::int64_t corpus_size = 0;
    std::vector<CorpusCheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (c.violations > 0) return false;
        return true;
    }
};

struct VerifyOptions {
    /// Re-verify freeness hypotheses with the Berge detector before applying
    /// a freeness-conditional check; non-free inputs are then skipped.
    bool strict = false;
    double tol = 1e-8;
};

/// Streams a corpus through named inequality checks and aggregates counts,
/// worst slack, and violations. Check names:
///   shadow_bound             rho(H) <= rho(shadow)/(r-1)
///   avg_degree               rho(H) >= r e(H)/n
///   walk_remark              w2(u) <= max_degree (r-1) w1(u) at every vertex
///   k2t_degree:<t>           the Berge-K_{2,t}-free degree inequality
///   spex_kst_c3:<s>:<t>      rho(H) <= the {K_{s,t}, triangle}-free bound
///   ex_kst_c3:<s>:<t>        e(H) <= the {K_{s,t}, triangle}-free edge bound
/// Arguments accept ':' or ',' separators; ':' keeps names usable inside
/// comma-separated lists.
///   c3_structure             neighborhood structure <=> no Berge triangle
CorpusReport verify_corpus(const std::function<std::optional<UniformHypergraph>()>& source,
                           const std::vector<std::string>& checks,
                           const VerifyOptions& options = {});

}  // namespace spexlin
