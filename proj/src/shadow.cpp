#include "spexlin/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spexlin {

Multigraph two_shadow(const UniformHypergraph& h) {
    Multigraph g(h.vertex_count());
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) g.add(e[i], e[j]);
    return g;
}

namespace {

struct AdjacencyLists {
    std::vector<std::vector<std::pair<Vertex, double>>> rows;

    explicit AdjacencyLists(const Multigraph& g)
        : rows(static_cast<std::size_t>(g.vertex_count())) {
        for (const auto& [pair, mult] : g.pairs()) {
            rows[static_cast<std::size_t>(pair.first)].emplace_back(pair.second, mult);
            rows[static_cast<std::size_t>(pair.second)].emplace_back(pair.first, mult);
        }
    }
};

std::vector<std::vector<Vertex>> multigraph_components(const AdjacencyLists& adj) {
    const std::size_t n = adj.rows.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp, stack{static_cast<Vertex>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto [w, mult] : adj.rows[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

SpectralResult multigraph_spectral_radius(const Multigraph& g, const IterationOptions& opts) {
    if (g.vertex_count() < 1) throw input_error("multigraph_spectral_radius: empty vertex set");
    if (opts.tol <= 0) throw input_error("multigraph_spectral_radius: tolerance must be positive");
    if (opts.max_iter < 1) throw input_error("multigraph_spectral_radius: max_iter must be positive");

    AdjacencyLists adj(g);
    SpectralResult result;
    result.eigenvector.assign(static_cast<std::size_t>(g.vertex_count()), 0.0);

    double best_rho = 0.0, lo_all = 0.0, hi_all = 0.0;
    std::vector<Vertex> best_comp;
    std::vector<double> best_vec;

    for (const auto& comp : multigraph_components(adj)) {
        if (comp.size() == 1 && adj.rows[static_cast<std::size_t>(comp[0])].empty()) continue;

        std::vector<std::size_t> local(static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            local[static_cast<std::size_t>(comp[i])] = i;

        std::vector<double> x(comp.size(), 1.0), y(comp.size());
        double lo = 0.0, hi = 0.0, rho = 0.0;
        bool converged = false;
        for (std::int64_t it = 1; it <= opts.max_iter; ++it) {
            ++result.iterations;
            lo = std::numeric_limits<double>::infinity();
            hi = 0.0;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                double acc = x[i];  // unit diagonal shift
                for (auto [w, mult] : adj.rows[static_cast<std::size_t>(comp[i])])
                    acc += mult * x[local[static_cast<std::size_t>(w)]];
                y[i] = acc;
                double ratio = acc / x[i];
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            rho = 0.5 * (lo + hi) - 1.0;
            if (hi - lo <= opts.tol) {
                converged = true;
                break;
            }
            double top = *std::max_element(y.begin(), y.end());
            for (std::size_t i = 0; i < comp.size(); ++i) x[i] = y[i] / top;
        }
        result.converged = result.converged && converged;
        lo_all = std::max(lo_all, lo - 1.0);
        hi_all = std::max(hi_all, hi - 1.0);
        if (rho > best_rho || best_comp.empty()) {
            best_rho = rho;
            best_comp = comp;
            best_vec = x;
        }
    }

    result.rho = best_rho;
    result.bracket_lo = lo_all;
    result.bracket_hi = hi_all;
    for (std::size_t i = 0; i < best_comp.size(); ++i)
        result.eigenvector[static_cast<std::size_t>(best_comp[i])] = best_vec[i];

    // residual of the matrix eigenpair
    double worst = 0.0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        double acc = 0.0;
        for (auto [w, mult] : adj.rows[static_cast<std::size_t>(v)])
            acc += mult * result.eigenvector[static_cast<std::size_t>(w)];
        worst = std::max(worst,
                         std::abs(acc - result.rho * result.eigenvector[static_cast<std::size_t>(v)]));
    }
    result.residual = worst;
    return result;
}

BoundReport check_shadow_bound(const UniformHypergraph& h, double tol,
                               const IterationOptions& opts) {
    auto tensor = spectral_radius(h, opts);
    auto shadow = multigraph_spectral_radius(two_shadow(h), opts);
    if (!tensor.converged || !shadow.converged)
        throw std::runtime_error("check_shadow_bound: spectral iteration did not converge");

    BoundReport report;
    report.name = "shadow_bound";
    const double bound = shadow.rho / (h.r() - 1);
    report.params = {{"r", static_cast<double>(h.r())},
                     {"n", static_cast<double>(h.vertex_count())},
                     {"rho_shadow", shadow.rho}};
    report.bound_value = bound;
    report.hypothesis_ok = true;  // the inequality has no side condition
    report.with_measured(tensor.rho, tol);

    if (is_connected(h)) {
        bool equality = std::abs(tensor.rho - bound) <= tol;
        report.params.emplace_back("connected", 1.0);
        report.params.emplace_back("equality", equality ? 1.0 : 0.0);
        report.params.emplace_back("regular", h.is_regular() ? 1.0 : 0.0);
        report.params.emplace_back("equality_is_regularity",
                                   (equality == h.is_regular()) ? 1.0 : 0.0);
    } else {
        report.params.emplace_back("connected", 0.0);
    }
    return report;
}

bool c3free_neighborhood_structure(const UniformHypergraph& h, Vertex u) {
    if (!h.is_linear())
        throw input_error("c3free_neighborhood_structure: input must be linear");
    if (u < 0 || u >= h.vertex_count()) throw input_error("vertex id out of range");

    auto nbhd = neighborhoods(h, u);
    const auto& n1 = nbhd.dist1;
    const int d = h.degree(u);
    const std::size_t clique_size = static_cast<std::size_t>(h.r() - 1);
    if (n1.size() != clique_size * static_cast<std::size_t>(d))
        return false;  // neighborhoods of distinct edges at u overlap

    // Shadow restricted to N(u): adjacency via shared edges.
    std::vector<std::size_t> local(static_cast<std::size_t>(h.vertex_count()),
                                   std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < n1.size(); ++i)
        local[static_cast<std::size_t>(n1[i])] = i;

    std::vector<std::vector<std::size_t>> adj(n1.size());
    for (const auto& e : h.edges()) {
        std::vector<std::size_t> members;
        for (Vertex v : e) {
            auto idx = local[static_cast<std::size_t>(v)];
            if (idx != std::numeric_limits<std::size_t>::max()) members.push_back(idx);
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                adj[members[i]].push_back(members[j]);
                adj[members[j]].push_back(members[i]);
            }
    }

    // Every vertex of a disjoint union of d cliques of size r-1 has exactly
    // r-2 distinct neighbors inside N(u); combined with |N(u)| = d(r-1) and
    // transitive closure by components this pins the structure.
    std::vector<char> seen(n1.size(), 0);
    int comps = 0;
    for (std::size_t s = 0; s < n1.size(); ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<std::size_t> stack{s}, comp;
        seen[s] = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (comp.size() != clique_size) return false;
        for (auto v : comp) {
            std::vector<std::size_t> distinct = adj[v];
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            if (distinct.size() != clique_size - 1) return false;
        }
    }
    return comps == d;
}

}  // namespace spexlin
