#include "spexlin/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace spexlin {

namespace {

// Label assignments are built one new label at a time. A partially relabeled
// edge is kept as its sorted assigned labels (all < depth) followed by
// kUnknown slots (eventual labels >= depth), which keeps tuple comparison
// against fully labeled edges decidable except at unknown-vs-unknown
// positions.
constexpr Vertex kUnknown = std::numeric_limits<Vertex>::max();

enum class Cmp { less, equal, greater, undecided };

struct Search {
    int r = 0;
    Vertex n = 0;
    std::vector<Edge> edges;                 // original edges
    std::vector<std::vector<std::size_t>> incidence;
    std::vector<Vertex> new_of_old;
    std::vector<Vertex> order;               // candidate ordering, degree-major
    std::vector<Edge> best;                  // best complete relabeled list
    bool improved = false;                   // best changed during the search
    bool stop_on_improve = false;

    std::vector<Edge> scratch;

    // Compares the final sorted edge list of the current partial assignment
    // (depth labels placed) against best. greater => prune; less => some
    // completion beats best... but every completion of this branch shares the
    // decided prefix, so the branch stays alive either way; undecided stops
    // the scan at the first unknown-vs-unknown position.
    Cmp compare_partial(Vertex depth) {
        scratch.clear();
        for (const auto& e : edges) {
            Edge t;
            t.reserve(e.size());
            int unknown = 0;
            for (Vertex v : e) {
                Vertex w = new_of_old[static_cast<std::size_t>(v)];
                if (w < 0)
                    ++unknown;
                else
                    t.push_back(w);
            }
            std::sort(t.begin(), t.end());
            t.resize(e.size(), kUnknown);
            (void)unknown;
            scratch.push_back(std::move(t));
        }
        std::sort(scratch.begin(), scratch.end());

        for (std::size_t i = 0; i < scratch.size(); ++i) {
            const Edge& p = scratch[i];
            const Edge& b = best[i];
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (p[j] == kUnknown) {
                    if (b[j] < depth) return Cmp::greater;
                    return Cmp::undecided;
                }
                if (p[j] < b[j]) return Cmp::less;
                if (p[j] > b[j]) return Cmp::greater;
            }
        }
        return Cmp::equal;
    }

    // True when the search can stop (canonicity disproved).
    bool assign(Vertex depth) {
        if (depth == n) {
            if (compare_partial(depth) == Cmp::less) {
                best = scratch;
                improved = true;
                return stop_on_improve;
            }
            return false;
        }
        for (Vertex cand : order) {
            if (new_of_old[static_cast<std::size_t>(cand)] >= 0) continue;
            new_of_old[static_cast<std::size_t>(cand)] = depth;
            Cmp c = compare_partial(depth + 1);
            if (c != Cmp::greater && assign(depth + 1)) return true;
            new_of_old[static_cast<std::size_t>(cand)] = -1;
        }
        return false;
    }

    void run(const UniformHypergraph& h, bool test_only) {
        r = h.r();
        n = h.vertex_count();
        edges = h.edges();
        new_of_old.assign(static_cast<std::size_t>(n), -1);
        best = edges;  // identity labeling is a valid candidate
        stop_on_improve = test_only;

        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return h.degree(a) > h.degree(b);
        });

        assign(0);
    }
};

}  // namespace

UniformHypergraph canonical_form(const UniformHypergraph& h) {
    if (h.vertex_count() > kCanonicalMaxVertices)
        throw capacity_error("canonical_form: vertex count exceeds " +
                             std::to_string(kCanonicalMaxVertices));
    if (h.edge_count() == 0) return h;
    Search s;
    s.run(h, /*test_only=*/false);
    return {h.r(), h.vertex_count(), std::move(s.best)};
}

bool is_canonical(const UniformHypergraph& h) {
    if (h.vertex_count() > kCanonicalMaxVertices)
        throw capacity_error("is_canonical: vertex count exceeds " +
                             std::to_string(kCanonicalMaxVertices));
    if (h.edge_count() == 0) return true;
    Search s;
    s.run(h, /*test_only=*/true);
    return !s.improved;
}

bool is_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
    if (a.r() != b.r() || a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace spexlin
