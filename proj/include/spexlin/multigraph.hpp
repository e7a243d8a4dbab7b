#pragma once

#include "spexlin/hypergraph.hpp"

#include <map>
#include <utility>

namespace spexlin {

/// A loopless multigraph stored as a sparse symmetric multiplicity map over
/// unordered vertex pairs. Absent pairs have multiplicity zero.
class Multigraph {
  public:
    explicit Multigraph(Vertex n) : n_(n) {
        if (n < 0) throw input_error("multigraph vertex count must be nonnegative");
    }

    Vertex vertex_count() const { return n_; }

    void add(Vertex u, Vertex v, int count = 1) {
        check(u);
        check(v);
        if (u == v) throw input_error("multigraph: self-loop");
        if (count <= 0) throw input_error("multigraph: multiplicity must be positive");
        mult_[key(u, v)] += count;
    }

    int multiplicity(Vertex u, Vertex v) const {
        check(u);
        check(v);
        if (u == v) return 0;
        auto it = mult_.find(key(u, v));
        return it == mult_.end() ? 0 : it->second;
    }

    /// Distinct adjacent pairs (simple edge count of the underlying graph).
    std::size_t pair_count() const { return mult_.size(); }

    /// Ordered pair -> multiplicity map; keys are (min, max).
    const std::map<std::pair<Vertex, Vertex>, int>& pairs() const { return mult_; }

    bool operator==(const Multigraph&) const = default;

  private:
    static std::pair<Vertex, Vertex> key(Vertex u, Vertex v) {
        return {std::min(u, v), std::max(u, v)};
    }
    void check(Vertex v) const {
        if (v < 0 || v >= n_) throw input_error("multigraph: vertex id out of range");
    }

    Vertex n_;
    std::map<std::pair<Vertex, Vertex>, int> mult_;
};

}  // namespace spexlin
