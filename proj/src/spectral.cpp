#include "spexlin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spexlin {

std::vector<double> apply_adjacency(const UniformHypergraph& h, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(h.vertex_count()))
        throw input_error("apply_adjacency: vector length does not match vertex count");
    std::vector<double> y(x.size(), 0.0);
    for (const auto& e : h.edges()) {
        // y_v += prod_{u in e, u != v} x_u for each v in e.
        for (Vertex v : e) {
            double prod = 1.0;
            for (Vertex u : e)
                if (u != v) prod *= x[static_cast<std::size_t>(u)];
            y[static_cast<std::size_t>(v)] += prod;
        }
    }
    return y;
}

double residual(const UniformHypergraph& h, double rho, std::span<const double> x) {
    auto y = apply_adjacency(h, x);
    const double exp = static_cast<double>(h.r() - 1);
    double worst = 0.0;
    for (std::size_t v = 0; v < y.size(); ++v)
        worst = std::max(worst, std::abs(y[v] - rho * std::pow(x[v], exp)));
    return worst;
}

namespace {

double int_pow(double x, int e) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= x;
    return acc;
}

struct ComponentSpectrum {
    double rho = 0.0;
    double lo = 0.0, hi = 0.0;
    std::vector<double> vec;  // on component-local labels, max-normalized
    std::int64_t iterations = 0;
    bool converged = true;
};

ComponentSpectrum component_spectral_radius(const UniformHypergraph& sub,
                                            const IterationOptions& opts) {
    ComponentSpectrum out;
    const auto n = static_cast<std::size_t>(sub.vertex_count());
    if (sub.edge_count() == 0) {
        out.vec.assign(n, 0.0);
        return out;
    }

    const int rm1 = sub.r() - 1;
    std::vector<double> x(n, 1.0), xr(n), y(n);
    for (std::int64_t it = 1; it <= opts.max_iter; ++it) {
        for (std::size_t v = 0; v < n; ++v) xr[v] = int_pow(x[v], rm1);
        y = apply_adjacency(sub, x);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            y[v] += xr[v];  // unit diagonal shift
            double ratio = y[v] / xr[v];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        out.iterations = it;
        out.lo = lo - 1.0;
        out.hi = hi - 1.0;
        out.rho = 0.5 * (lo + hi) - 1.0;
        if (hi - lo <= opts.tol) {
            out.vec = x;
            return out;
        }
        double top = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            x[v] = rm1 == 1 ? y[v] : (rm1 == 2 ? std::sqrt(y[v]) : std::pow(y[v], 1.0 / rm1));
            top = std::max(top, x[v]);
        }
        for (std::size_t v = 0; v < n; ++v) x[v] /= top;
    }
    out.converged = false;
    out.vec = x;
    return out;
}

}  // namespace

SpectralResult spectral_radius(const UniformHypergraph& h, const IterationOptions& opts) {
    if (h.vertex_count() < 1) throw input_error("spectral_radius: empty vertex set");
    if (opts.tol <= 0) throw input_error("spectral_radius: tolerance must be positive");
    if (opts.max_iter < 1) throw input_error("spectral_radius: max_iter must be positive");

    SpectralResult result;
    result.eigenvector.assign(static_cast<std::size_t>(h.vertex_count()), 0.0);

    ComponentSpectrum top;
    std::vector<Vertex> top_ids;
    bool have = false;
    double lo = 0.0, hi = 0.0;
    for (const auto& comp : components(h)) {
        auto sub = induced(h, comp);
        auto cs = component_spectral_radius(sub.hypergraph, opts);
        result.iterations += cs.iterations;
        result.converged = result.converged && cs.converged;
        lo = std::max(lo, cs.lo);
        hi = std::max(hi, cs.hi);
        if (!have || cs.rho > top.rho) {
            top = std::move(cs);
            top_ids = sub.vertex_ids;
            have = true;
        }
    }

    result.rho = top.rho;
    result.bracket_lo = lo;  // max of per-component enclosures encloses the max
    result.bracket_hi = hi;
    for (std::size_t i = 0; i < top_ids.size(); ++i)
        result.eigenvector[static_cast<std::size_t>(top_ids[i])] = top.vec[i];
    result.residual = residual(h, result.rho, result.eigenvector);
    return result;
}

}  // namespace spexlin
