#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spexlin {

using Vertex = std::int32_t;

/// An edge is a strictly increasing list of vertex ids.
using Edge = std::vector<Vertex>;

/// Malformed caller input (bad vertex ids, inconsistent sizes, bad partitions).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded (exponential-cost operation on too large an instance).
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

/// An r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored sorted, with the edge list itself in lexicographic order,
/// so structural equality is field equality. Vertices may be isolated.
/// Instances are immutable after construction and safe to share across threads.
class UniformHypergraph {
  public:
    /// Validates and normalizes: sorts each edge, sorts the edge list,
    /// rejects repeated vertices inside an edge, duplicate edges, and
    /// out-of-range ids.
    UniformHypergraph(int r, Vertex n, std::vector<Edge> edges);

    static UniformHypergraph empty(int r, Vertex n) { return {r, n, {}}; }

    int r() const { return r_; }
    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    /// Indices of the edges containing v.
    const std::vector<std::size_t>& incident_edges(Vertex v) const;

    int degree(Vertex v) const;
    int max_degree() const;

    bool is_linear() const;
    bool is_regular() const;

    bool operator==(const UniformHypergraph&) const = default;

  private:
    int r_;
    Vertex n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// Head/mass vertex bipartition; valid when head and mass partition 0..n-1.
struct HmBipartition {
    std::vector<Vertex> head;
    std::vector<Vertex> mass;
};

/// Walk counts w_k(u, v) for a fixed start u and length k.
struct WalkTable {
    Vertex source = 0;
    int length = 0;
    std::vector<std::uint64_t> counts;  // per end vertex
    std::uint64_t total = 0;
};

enum class OverflowPolicy { error, saturate };

/// Counts walks u = v1 e1 v2 ... ek v_{k+1}: consecutive vertices distinct and
/// jointly contained in the step's edge; vertices and edges may repeat
/// elsewhere. Accumulation is checked 64-bit; OverflowPolicy::error throws
/// std::overflow_error, saturate clamps at the maximum.
WalkTable count_walks(const UniformHypergraph& h, Vertex u, int k,
                      OverflowPolicy policy = OverflowPolicy::error);

struct Neighborhoods {
    std::vector<Vertex> dist1;  // N(u)
    std::vector<Vertex> dist2;  // N^2(u)
};

/// Vertices at distance exactly one and exactly two from u.
Neighborhoods neighborhoods(const UniformHypergraph& h, Vertex u);

/// Connected components as sorted vertex sets; isolated vertices are
/// singleton components. Sorted by smallest member.
std::vector<std::vector<Vertex>> components(const UniformHypergraph& h);

bool is_connected(const UniformHypergraph& h);

/// A relabeled subhypergraph plus the map back to the original ids:
/// vertex_ids[new_id] == old_id.
struct SubHypergraph {
    UniformHypergraph hypergraph;
    std::vector<Vertex> vertex_ids;
};

/// H[S]: edges fully inside S, relabeled onto 0..|S|-1 (sorted order of S).
SubHypergraph induced(const UniformHypergraph& h, std::span<const Vertex> s);

/// H[S,T]: edges inside S union T meeting both sides; S and T must be disjoint.
SubHypergraph cross(const UniformHypergraph& h, std::span<const Vertex> s,
                    std::span<const Vertex> t);

/// True iff every edge meets p.head in exactly one vertex.
/// Throws input_error when p does not partition 0..n-1.
bool check_hm_bipartite(const UniformHypergraph& h, const HmBipartition& p);

}  // namespace spexlin
