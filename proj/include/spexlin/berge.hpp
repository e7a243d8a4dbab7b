#pragma once

#include "spexlin/hypergraph.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spexlin {

/// A simple graph pattern F. Berge containment asks for an injection of
/// V(F) into V(H) and a matching injection of E(F) into E(H) such that each
/// pattern edge's endpoint images lie inside its hyperedge.
struct PatternGraph {
    Vertex nv = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    PatternGraph() = default;
    PatternGraph(Vertex nv, std::vector<std::pair<Vertex, Vertex>> edges);

    static PatternGraph single_edge();
    static PatternGraph path(int edge_count);
    static PatternGraph cycle(int k);
    static PatternGraph complete_bipartite(int s, int t);

    std::size_t edge_count() const { return edges.size(); }
    int degree(Vertex v) const;
};

/// A witness of Berge-F containment: injective vertex and edge maps with
/// {vertex_map[a], vertex_map[b]} inside edge_map image for every pattern
/// edge {a, b}.
struct BergeEmbedding {
    std::vector<Vertex> vertex_map;       // pattern vertex -> host vertex
    std::vector<std::size_t> edge_map;    // pattern edge index -> host edge index
};

struct BergeOptions {
    std::size_t max_pattern_edges = 12;  // search is exponential in the pattern
};

/// Backtracking over injective vertex images (descending pattern degree)
/// with a bipartite maximum matching between fully placed pattern edges and
/// distinct candidate hyperedges after every extension; a branch dies as
/// soon as the matching cannot cover the placed pattern edges. Deterministic:
/// candidates are tried in ascending order, so the returned witness is
/// reproducible. Linear hosts use a triangle fast path.
std::optional<BergeEmbedding> contains_berge(const UniformHypergraph& h,
                                             const PatternGraph& f,
                                             const BergeOptions& opts = {});

struct FamilyWitness {
    std::size_t pattern_index;
    BergeEmbedding embedding;
};

struct FamilyFreeResult {
    bool free = true;
    std::optional<FamilyWitness> witness;
};

/// True iff no pattern in the list is contained; otherwise carries the first
/// (lowest index) witness.
FamilyFreeResult is_family_free(const UniformHypergraph& h,
                                std::span<const PatternGraph> patterns,
                                const BergeOptions& opts = {});

/// The r-expansion F^r: each pattern edge becomes a hyperedge padded with
/// r-2 fresh private vertices. Pattern vertices keep their ids; padding ids
/// follow. The result is linear with e(F) edges.
UniformHypergraph expansion(const PatternGraph& f, int r);

/// All isomorphism classes of r-uniform hypergraphs obtained by enlarging
/// each pattern edge with r-2 added vertices, where added vertices are
/// fresh (outside V(F)) and may be shared between enlargements in every
/// possible sharing pattern; edges must stay pairwise distinct and the
/// vertex set is the union of the edges. Deduplicated by canonical form.
/// Guard: e(F) * (r-2) <= 12.
std::vector<UniformHypergraph> enumerate_berge_family(const PatternGraph& f, int r);

/// Berge-K_{s,t} containment with the s-side image constrained to p.head and
/// the t-side image to p.mass. Requires h to be hm-bipartite under p.
std::optional<BergeEmbedding> contains_exact_berge_kst(const UniformHypergraph& h,
                                                       const HmBipartition& p, int s, int t,
                                                       const BergeOptions& opts = {});

}  // namespace spexlin
