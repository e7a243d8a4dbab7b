#pragma once

#include "spexlin/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace spexlin {

/// Outcome of a spectral radius computation.
///
/// [bracket_lo, bracket_hi] is a rigorous enclosure of rho from the last
/// min/max ratio pair, valid per connected piece; when converged it has
/// width <= tol. The eigenvector is max-normalized to 1, supported on a
/// component attaining rho (all-zero only for an edgeless hypergraph).
struct SpectralResult {
    double rho = 0.0;
    std::vector<double> eigenvector;
    std::int64_t iterations = 0;
    double residual = 0.0;
    bool converged = true;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

struct IterationOptions {
    double tol = 1e-10;
    std::int64_t max_iter = 100000;
};

/// y = A(H) x^{r-1}: y_v = sum over edges e containing v of the product of
/// x_u over u in e minus v. The 1/(r-1)! tensor entry cancels against the
/// (r-1)! orderings of e minus v, so the per-edge product form is exact.
std::vector<double> apply_adjacency(const UniformHypergraph& h, std::span<const double> x);

/// max_v | (A x^{r-1})_v - rho * x_v^{r-1} |
double residual(const UniformHypergraph& h, double rho, std::span<const double> x);

/// Adjacency-tensor spectral radius by shifted power iteration run per
/// connected component: y = A x^{r-1} + x^{[r-1]}, x <- y^{[1/(r-1)]}
/// max-normalized. The unit shift makes the iteration convergent on every
/// connected hypergraph; the ratios y_v / x_v^{r-1} bracket rho + 1 at each
/// step. Stops when the bracket width drops below tol. Requires n >= 1.
SpectralResult spectral_radius(const UniformHypergraph& h, const IterationOptions& opts = {});

inline SpectralResult spectral_radius(const UniformHypergraph& h, double tol,
                                      std::int64_t max_iter = 100000) {
    return spectral_radius(h, IterationOptions{tol, max_iter});
}

}  // namespace spexlin
