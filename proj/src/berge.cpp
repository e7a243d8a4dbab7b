#include "spexlin/berge.hpp"

#include "spexlin/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace spexlin {

PatternGraph::PatternGraph(Vertex nv_, std::vector<std::pair<Vertex, Vertex>> edges_)
    : nv(nv_), edges(std::move(edges_)) {
    if (nv < 0) throw input_error("pattern: negative vertex count");
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto& [a, b] : edges) {
        if (a == b) throw input_error("pattern: loop edge");
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= nv) throw input_error("pattern: vertex id out of range");
        if (!seen.emplace(a, b).second) throw input_error("pattern: repeated edge");
    }
    std::sort(edges.begin(), edges.end());
}

PatternGraph PatternGraph::single_edge() { return {2, {{0, 1}}}; }

PatternGraph PatternGraph::path(int edge_count) {
    if (edge_count < 1) throw input_error("path: need at least one edge");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < edge_count; ++i) e.emplace_back(i, i + 1);
    return {static_cast<Vertex>(edge_count + 1), std::move(e)};
}

PatternGraph PatternGraph::cycle(int k) {
    if (k < 3) throw input_error("cycle: need at least three vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return {static_cast<Vertex>(k), std::move(e)};
}

PatternGraph PatternGraph::complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw input_error("complete_bipartite: sides must be positive");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) e.emplace_back(i, s + j);
    return {static_cast<Vertex>(s + t), std::move(e)};
}

int PatternGraph::degree(Vertex v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

namespace {

// Kuhn's augmenting-path matching between placed pattern edges and host
// edges. candidates[i] lists host edges that contain both endpoint images of
// placed pattern edge i.
class EdgeMatcher {
  public:
    bool full_matching(const std::vector<std::vector<std::size_t>>& candidates,
                       std::vector<std::size_t>* out) {
        host_of_.assign(candidates.size(), kNone);
        pattern_of_.clear();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            visited_.clear();
            if (!augment(candidates, i)) return false;
        }
        if (out) *out = host_of_;
        return true;
    }

  private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    bool augment(const std::vector<std::vector<std::size_t>>& candidates, std::size_t i) {
        for (std::size_t host : candidates[i]) {
            if (visited_.count(host)) continue;
            visited_.insert(host);
            auto it = pattern_of_.find(host);
            if (it == pattern_of_.end() || augment(candidates, it->second)) {
                pattern_of_[host] = i;
                host_of_[i] = host;
                return true;
            }
        }
        return false;
    }

    std::vector<std::size_t> host_of_;
    std::map<std::size_t, std::size_t> pattern_of_;
    std::set<std::size_t> visited_;
};

struct BergeSearch {
    const UniformHypergraph& h;
    const PatternGraph& f;
    const std::vector<std::vector<Vertex>>* allowed;  // per pattern vertex, or null

    std::vector<Vertex> order;        // pattern vertices, descending degree
    std::vector<Vertex> image;        // pattern vertex -> host vertex or -1
    std::vector<char> used;           // host vertex usage
    std::vector<std::size_t> placed;  // pattern edge indices with both ends placed
    std::vector<std::vector<std::size_t>> candidates;  // parallel to placed
    EdgeMatcher matcher;

    BergeSearch(const UniformHypergraph& h_, const PatternGraph& f_,
                const std::vector<std::vector<Vertex>>* allowed_)
        : h(h_), f(f_), allowed(allowed_) {
        order.resize(static_cast<std::size_t>(f.nv));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return f.degree(a) > f.degree(b); });
        image.assign(static_cast<std::size_t>(f.nv), -1);
        used.assign(static_cast<std::size_t>(h.vertex_count()), 0);
    }

    // Host edges containing both images of pattern edge fe.
    std::vector<std::size_t> edge_candidates(std::size_t fe) const {
        Vertex a = image[static_cast<std::size_t>(f.edges[fe].first)];
        Vertex b = image[static_cast<std::size_t>(f.edges[fe].second)];
        std::vector<std::size_t> out;
        const auto& ia = h.incident_edges(a);
        const auto& ib = h.incident_edges(b);
        std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                              std::back_inserter(out));
        return out;
    }

    bool extend(std::size_t depth, BergeEmbedding* out) {
        if (depth == order.size()) {
            std::vector<std::size_t> host_edges;
            if (!matcher.full_matching(candidates, &host_edges)) return false;
            out->vertex_map = image;
            out->edge_map.assign(f.edge_count(), 0);
            for (std::size_t i = 0; i < placed.size(); ++i)
                out->edge_map[placed[i]] = host_edges[i];
            return true;
        }

        const Vertex pv = order[depth];
        const int want = f.degree(pv);
        for (Vertex hv = 0; hv < h.vertex_count(); ++hv) {
            if (used[static_cast<std::size_t>(hv)]) continue;
            if (h.degree(hv) < want) continue;
            if (allowed) {
                const auto& ok = (*allowed)[static_cast<std::size_t>(pv)];
                if (!std::binary_search(ok.begin(), ok.end(), hv)) continue;
            }
            image[static_cast<std::size_t>(pv)] = hv;
            used[static_cast<std::size_t>(hv)] = 1;

            std::size_t added = 0;
            bool feasible = true;
            for (std::size_t fe = 0; fe < f.edge_count(); ++fe) {
                auto [a, b] = f.edges[fe];
                bool places_now = (a == pv || b == pv) &&
                                  image[static_cast<std::size_t>(a)] >= 0 &&
                                  image[static_cast<std::size_t>(b)] >= 0;
                if (!places_now) continue;
                auto cand = edge_candidates(fe);
                if (cand.empty()) {
                    feasible = false;
                    break;
                }
                placed.push_back(fe);
                candidates.push_back(std::move(cand));
                ++added;
            }
            if (feasible && added > 0)
                feasible = matcher.full_matching(candidates, nullptr);
            if (feasible && extend(depth + 1, out)) return true;

            for (std::size_t i = 0; i < added; ++i) {
                placed.pop_back();
                candidates.pop_back();
            }
            image[static_cast<std::size_t>(pv)] = -1;
            used[static_cast<std::size_t>(hv)] = 0;
        }
        return false;
    }
};

bool is_triangle(const PatternGraph& f) {
    return f.nv == 3 && f.edges.size() == 3;  // constructor bans loops/repeats
}

// In a linear host a Berge triangle is exactly three edges whose pairwise
// intersections are three distinct vertices.
std::optional<BergeEmbedding> linear_triangle_search(const UniformHypergraph& h,
                                                     const PatternGraph& f) {
    const auto& edges = h.edges();
    const std::size_t m = edges.size();
    auto meet = [&](std::size_t i, std::size_t j) -> Vertex {
        const auto& a = edges[i];
        const auto& b = edges[j];
        std::size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
            if (a[x] < b[y])
                ++x;
            else if (a[x] > b[y])
                ++y;
            else
                return a[x];
        }
        return -1;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vertex vij = meet(i, j);
            if (vij < 0) continue;
            for (std::size_t k = j + 1; k < m; ++k) {
                Vertex vik = meet(i, k);
                Vertex vjk = meet(j, k);
                if (vik < 0 || vjk < 0) continue;
                if (vij == vik || vij == vjk || vik == vjk) continue;
                // pattern edges sorted: (0,1), (0,2), (1,2)
                BergeEmbedding emb;
                emb.vertex_map = {vij, vik, vjk};
                // (0,1) -> edge i (contains vij, vik); (0,2) -> j; (1,2) -> k
                emb.edge_map = {i, j, k};
                (void)f;
                return emb;
            }
        }
    return std::nullopt;
}

std::optional<BergeEmbedding> match_berge(const UniformHypergraph& h, const PatternGraph& f,
                                          const std::vector<std::vector<Vertex>>* allowed,
                                          const BergeOptions& opts) {
    if (f.edge_count() > opts.max_pattern_edges)
        throw capacity_error("berge search: pattern has too many edges");
    if (f.nv > h.vertex_count() || f.edge_count() > h.edge_count()) return std::nullopt;
    if (f.nv == 0) return BergeEmbedding{};

    BergeSearch search(h, f, allowed);
    BergeEmbedding emb;
    if (search.extend(0, &emb)) return emb;
    return std::nullopt;
}

}  // namespace

std::optional<BergeEmbedding> contains_berge(const UniformHypergraph& h, const PatternGraph& f,
                                             const BergeOptions& opts) {
    if (is_triangle(f) && h.is_linear()) return linear_triangle_search(h, f);
    return match_berge(h, f, nullptr, opts);
}

FamilyFreeResult is_family_free(const UniformHypergraph& h,
                                std::span<const PatternGraph> patterns,
                                const BergeOptions& opts) {
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (auto emb = contains_berge(h, patterns[i], opts))
            return {false, FamilyWitness{i, std::move(*emb)}};
    }
    return {true, std::nullopt};
}

UniformHypergraph expansion(const PatternGraph& f, int r) {
    if (r < 2) throw input_error("expansion: uniformity must be at least 2");
    const int pad = r - 2;
    std::vector<Edge> edges;
    Vertex next = f.nv;
    for (auto [a, b] : f.edges) {
        Edge e{a, b};
        for (int i = 0; i < pad; ++i) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return {r, next, std::move(edges)};
}

std::vector<UniformHypergraph> enumerate_berge_family(const PatternGraph& f, int r) {
    if (r < 2) throw input_error("berge family: uniformity must be at least 2");
    const int pad = r - 2;
    const std::size_t slots = f.edge_count() * static_cast<std::size_t>(pad);
    if (slots > 12) throw capacity_error("berge family: too many added-vertex slots");
    if (f.nv + static_cast<Vertex>(slots) > kCanonicalMaxVertices)
        throw capacity_error("berge family: members exceed the canonical-form size cap");

    std::vector<UniformHypergraph> classes;
    std::vector<UniformHypergraph> canon_seen;

    // Added vertices are drawn from a pool with restricted growth: an edge's
    // padding is any subset of the existing pool plus a block of fresh ids.
    std::vector<std::vector<Vertex>> pads(f.edge_count());
    auto emit = [&]() {
        std::vector<Edge> edges;
        Vertex max_used = -1;
        for (std::size_t i = 0; i < f.edge_count(); ++i) {
            Edge e{f.edges[i].first, f.edges[i].second};
            for (Vertex a : pads[i]) {
                e.push_back(f.nv + a);
                max_used = std::max(max_used, static_cast<Vertex>(f.nv + a));
            }
            edges.push_back(std::move(e));
        }
        // compact onto the union of the edges (unused pattern vertices drop out)
        std::vector<Vertex> seen_ids;
        for (const auto& e : edges)
            for (Vertex v : e) seen_ids.push_back(v);
        std::sort(seen_ids.begin(), seen_ids.end());
        seen_ids.erase(std::unique(seen_ids.begin(), seen_ids.end()), seen_ids.end());
        std::vector<Vertex> remap(static_cast<std::size_t>(std::max<Vertex>(max_used + 1, f.nv)),
                                  -1);
        for (std::size_t i = 0; i < seen_ids.size(); ++i)
            remap[static_cast<std::size_t>(seen_ids[i])] = static_cast<Vertex>(i);
        for (auto& e : edges)
            for (auto& v : e) v = remap[static_cast<std::size_t>(v)];

        UniformHypergraph member(r, static_cast<Vertex>(seen_ids.size()), std::move(edges));
        auto canon = canonical_form(member);
        for (const auto& c : canon_seen)
            if (c == canon) return;
        canon_seen.push_back(canon);
        classes.push_back(std::move(canon));
    };

    // Recursive assignment of each edge's padding set.
    auto choose = [&](auto&& self, std::size_t edge_idx, Vertex pool) -> void {
        if (edge_idx == f.edge_count()) {
            emit();
            return;
        }
        // pick k existing pool members and pad-k fresh ones
        std::vector<Vertex> subset;
        auto pick = [&](auto&& pick_self, Vertex from, int need) -> void {
            if (need == 0) {
                auto& dst = pads[edge_idx];
                dst = subset;
                Vertex fresh = pool;
                while (static_cast<int>(dst.size()) < pad) dst.push_back(fresh++);
                self(self, edge_idx + 1, fresh);
                return;
            }
            for (Vertex v = from; v < pool; ++v) {
                subset.push_back(v);
                pick_self(pick_self, v + 1, need - 1);
                subset.pop_back();
            }
        };
        for (int existing = std::min<int>(pad, pool); existing >= 0; --existing)
            pick(pick, 0, existing);
    };
    choose(choose, 0, 0);

    std::sort(classes.begin(), classes.end(),
              [](const UniformHypergraph& a, const UniformHypergraph& b) {
                  if (a.vertex_count() != b.vertex_count())
                      return a.vertex_count() < b.vertex_count();
                  return a.edges() < b.edges();
              });
    return classes;
}

std::optional<BergeEmbedding> contains_exact_berge_kst(const UniformHypergraph& h,
                                                       const HmBipartition& p, int s, int t,
                                                       const BergeOptions& opts) {
    if (s < 1 || t < 1) throw input_error("exact berge: sides must be positive");
    if (!check_hm_bipartite(h, p))
        throw input_error("exact berge: input is not hm-bipartite under the given partition");

    auto f = PatternGraph::complete_bipartite(s, t);
    std::vector<Vertex> head = p.head, mass = p.mass;
    std::sort(head.begin(), head.end());
    std::sort(mass.begin(), mass.end());
    std::vector<std::vector<Vertex>> allowed(static_cast<std::size_t>(f.nv));
    for (int i = 0; i < s; ++i) allowed[static_cast<std::size_t>(i)] = head;
    for (int j = 0; j < t; ++j) allowed[static_cast<std::size_t>(s + j)] = mass;
    return match_berge(h, f, &allowed, opts);
}

}  // namespace spexlin
