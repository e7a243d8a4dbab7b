#include "spexlin/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace spexlin {

UniformHypergraph::UniformHypergraph(int r, Vertex n, std::vector<Edge> edges)
    : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 2) throw input_error("uniformity r must be at least 2");
    if (n_ < 0) throw input_error("vertex count must be nonnegative");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != r_)
            throw input_error("edge has " + std::to_string(e.size()) +
                              " vertices, expected " + std::to_string(r_));
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_)
                throw input_error("vertex id " + std::to_string(e[i]) +
                                  " out of range [0, " + std::to_string(n_) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw input_error("edge repeats vertex " + std::to_string(e[i]));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw input_error("duplicate edge");

    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i]) incidence_[static_cast<std::size_t>(v)].push_back(i);
}

const std::vector<std::size_t>& UniformHypergraph::incident_edges(Vertex v) const {
    if (v < 0 || v >= n_) throw input_error("vertex id out of range");
    return incidence_[static_cast<std::size_t>(v)];
}

int UniformHypergraph::degree(Vertex v) const {
    return static_cast<int>(incident_edges(v).size());
}

int UniformHypergraph::max_degree() const {
    int d = 0;
    for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
    return d;
}

bool UniformHypergraph::is_linear() const {
    // Two edges sharing >= 2 vertices share some pair, so it suffices to
    // check that no unordered pair lies in two edges.
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& e : edges_)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                if (!seen.emplace(e[i], e[j]).second) return false;
    return true;
}

bool UniformHypergraph::is_regular() const {
    if (n_ == 0) return true;
    int d = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

WalkTable count_walks(const UniformHypergraph& h, Vertex u, int k, OverflowPolicy policy) {
    if (u < 0 || u >= h.vertex_count()) throw input_error("walk source out of range");
    if (k < 0) throw input_error("walk length must be nonnegative");

    const auto n = static_cast<std::size_t>(h.vertex_count());
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    auto add = [&](std::uint64_t& acc, std::uint64_t inc) {
        if (acc > kMax - inc) {
            if (policy == OverflowPolicy::error)
                throw std::overflow_error("walk count exceeds 64 bits");
            acc = kMax;
        } else {
            acc += inc;
        }
    };

    std::vector<std::uint64_t> cur(n, 0), next(n);
    cur[static_cast<std::size_t>(u)] = 1;
    for (int step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t v = 0; v < n; ++v) {
            if (cur[v] == 0) continue;
            for (std::size_t ei : h.incident_edges(static_cast<Vertex>(v)))
                for (Vertex w : h.edge(ei))
                    if (static_cast<std::size_t>(w) != v)
                        add(next[static_cast<std::size_t>(w)], cur[v]);
        }
        cur.swap(next);
    }

    WalkTable table;
    table.source = u;
    table.length = k;
    table.counts = std::move(cur);
    for (std::uint64_t c : table.counts) add(table.total, c);
    return table;
}

Neighborhoods neighborhoods(const UniformHypergraph& h, Vertex u) {
    if (u < 0 || u >= h.vertex_count()) throw input_error("vertex id out of range");
    std::vector<char> mark(static_cast<std::size_t>(h.vertex_count()), 0);
    mark[static_cast<std::size_t>(u)] = 3;

    Neighborhoods out;
    for (std::size_t ei : h.incident_edges(u))
        for (Vertex w : h.edge(ei))
            if (!mark[static_cast<std::size_t>(w)]) {
                mark[static_cast<std::size_t>(w)] = 1;
                out.dist1.push_back(w);
            }
    for (Vertex v : out.dist1)
        for (std::size_t ei : h.incident_edges(v))
            for (Vertex w : h.edge(ei))
                if (!mark[static_cast<std::size_t>(w)]) {
                    mark[static_cast<std::size_t>(w)] = 2;
                    out.dist2.push_back(w);
                }
    std::sort(out.dist1.begin(), out.dist1.end());
    std::sort(out.dist2.begin(), out.dist2.end());
    return out;
}

std::vector<std::vector<Vertex>> components(const UniformHypergraph& h) {
    const Vertex n = h.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (std::size_t ei : h.incident_edges(v))
                for (Vertex w : h.edge(ei))
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        q.push(w);
                    }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const UniformHypergraph& h) {
    return components(h).size() == 1;
}

namespace {

std::vector<Vertex> sorted_unique_set(std::span<const Vertex> s, Vertex n, const char* what) {
    std::vector<Vertex> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (Vertex v : out)
        if (v < 0 || v >= n)
            throw input_error(std::string(what) + ": vertex id " + std::to_string(v) +
                              " out of range");
    return out;
}

SubHypergraph relabel_onto(const UniformHypergraph& h, std::vector<Vertex> verts,
                           const std::vector<Edge>& kept) {
    std::vector<Vertex> old_to_new(static_cast<std::size_t>(h.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        old_to_new[static_cast<std::size_t>(verts[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    edges.reserve(kept.size());
    for (const auto& e : kept) {
        Edge mapped;
        mapped.reserve(e.size());
        for (Vertex v : e) mapped.push_back(old_to_new[static_cast<std::size_t>(v)]);
        edges.push_back(std::move(mapped));
    }
    UniformHypergraph sub(h.r(), static_cast<Vertex>(verts.size()), std::move(edges));
    return {std::move(sub), std::move(verts)};
}

}  // namespace

SubHypergraph induced(const UniformHypergraph& h, std::span<const Vertex> s) {
    auto verts = sorted_unique_set(s, h.vertex_count(), "induced");
    std::vector<char> in(static_cast<std::size_t>(h.vertex_count()), 0);
    for (Vertex v : verts) in[static_cast<std::size_t>(v)] = 1;
    std::vector<Edge> kept;
    for (const auto& e : h.edges()) {
        bool inside = std::all_of(e.begin(), e.end(),
                                  [&](Vertex v) { return in[static_cast<std::size_t>(v)]; });
        if (inside) kept.push_back(e);
    }
    return relabel_onto(h, std::move(verts), kept);
}

SubHypergraph cross(const UniformHypergraph& h, std::span<const Vertex> s,
                    std::span<const Vertex> t) {
    auto sv = sorted_unique_set(s, h.vertex_count(), "cross");
    auto tv = sorted_unique_set(t, h.vertex_count(), "cross");
    std::vector<char> side(static_cast<std::size_t>(h.vertex_count()), 0);
    for (Vertex v : sv) side[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : tv) {
        if (side[static_cast<std::size_t>(v)])
            throw input_error("cross: S and T overlap at vertex " + std::to_string(v));
        side[static_cast<std::size_t>(v)] = 2;
    }

    std::vector<Vertex> verts;
    verts.reserve(sv.size() + tv.size());
    std::merge(sv.begin(), sv.end(), tv.begin(), tv.end(), std::back_inserter(verts));

    std::vector<Edge> kept;
    for (const auto& e : h.edges()) {
        bool hits_s = false, hits_t = false, inside = true;
        for (Vertex v : e) {
            switch (side[static_cast<std::size_t>(v)]) {
                case 1: hits_s = true; break;
                case 2: hits_t = true; break;
                default: inside = false;
            }
            if (!inside) break;
        }
        if (inside && hits_s && hits_t) kept.push_back(e);
    }
    return relabel_onto(h, std::move(verts), kept);
}

bool check_hm_bipartite(const UniformHypergraph& h, const HmBipartition& p) {
    const Vertex n = h.vertex_count();
    std::vector<char> side(static_cast<std::size_t>(n), 0);
    auto place = [&](const std::vector<Vertex>& part, char tag) {
        for (Vertex v : part) {
            if (v < 0 || v >= n) throw input_error("hm-bipartition: vertex id out of range");
            if (side[static_cast<std::size_t>(v)])
                throw input_error("hm-bipartition: vertex " + std::to_string(v) +
                                  " appears twice");
            side[static_cast<std::size_t>(v)] = tag;
        }
    };
    place(p.head, 1);
    place(p.mass, 2);
    for (Vertex v = 0; v < n; ++v)
        if (!side[static_cast<std::size_t>(v)])
            throw input_error("hm-bipartition: vertex " + std::to_string(v) + " unassigned");

    for (const auto& e : h.edges()) {
        int in_head = 0;
        for (Vertex v : e)
            if (side[static_cast<std::size_t>(v)] == 1) ++in_head;
        if (in_head != 1) return false;
    }
    return true;
}

}  // namespace spexlin
