#pragma once

#include "spexlin/hypergraph.hpp"

namespace fixtures {

using spexlin::UniformHypergraph;

// The 7-point, 7-line projective plane: 3-uniform, linear, 3-regular,
// every pair of points on exactly one line.
inline UniformHypergraph fano() {
    return {3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

// d edges of size r pairwise meeting in the single center vertex 0.
inline UniformHypergraph loose_star(int r, int d) {
    std::vector<spexlin::Edge> edges;
    spexlin::Vertex next = 1;
    for (int i = 0; i < d; ++i) {
        spexlin::Edge e{0};
        for (int j = 1; j < r; ++j) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return {r, next, std::move(edges)};
}

inline UniformHypergraph triangle_graph() { return {2, 3, {{0, 1}, {1, 2}, {0, 2}}}; }

inline UniformHypergraph path3_graph() { return {2, 3, {{0, 1}, {1, 2}}}; }

// Three 3-edges pairwise meeting in three distinct vertices (a Berge triangle).
inline UniformHypergraph loose_triangle() {
    return {3, 6, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}}};
}

// Four triples on six points, every point in exactly two (2-regular, linear).
inline UniformHypergraph pasch() {
    return {3, 6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}};
}

}  // namespace fixtures
