#pragma once

#include "spexlin/hypergraph.hpp"
#include "spexlin/report.hpp"
#include "spexlin/spectral.hpp"

#include <cstdint>
#include <span>

namespace spexlin {

/// Default comparison tolerance for rho-valued inequalities.
inline constexpr double kBoundTol = 1e-9;

/// Upper bound sqrt(q) + sqrt(p) * q^{1/4} for the positive root of
/// x^2 - p x - q, valid when sqrt(q) >= p/2. Requires p > 0, q > 0.
double fact_root1(double p, double q);
bool fact_root1_applicable(double p, double q);

/// Upper bound p + q/p for the positive root of x^2 - p x - q.
/// Requires p > 0, q >= 0.
double fact_root2(double p, double q);

/// The positive root (p + sqrt(p^2 + 4q)) / 2 itself.
double quadratic_positive_root(double p, double q);

/// Checks the walk inequality w2(u) <= P w1(u) + (r-1) Q at every vertex
/// (the hypothesis) and whether rho respects the implied quadratic
/// rho^2 - P rho/(r-1) - Q/(r-1) <= 0, reported as rho <= positive root.
BoundReport walk_quadratic_check(const UniformHypergraph& h, double P, double Q,
                                 double tol = kBoundTol, const IterationOptions& opts = {});

/// Smallest Q (clamped at 0) making the walk hypothesis hold for the given P.
double fit_min_Q(const UniformHypergraph& h, double P);

/// The degree-sum form of the same quadratic for linear hypergraphs:
/// hypothesis sum_{u in N(v)} d(u) <= P d(v) + Q at every vertex.
BoundReport degree_quadratic_check(const UniformHypergraph& h, double P, double Q,
                                   double tol = kBoundTol, const IterationOptions& opts = {});

/// Degree inequality granted by forbidding Berge-K_{2,t} in linear
/// hypergraphs: sum_{u in N(v)} d(u) <= (2r^2-4r+1) t d(v) + (t-1) n / (r-1)
/// for every v. The freeness of the input is the caller's responsibility.
bool k2t_degree_hypothesis(const UniformHypergraph& h, int t);

/// Closed-form spectral bound for Berge-K_{2,t}-free linear hypergraphs:
/// sqrt(t-1)/(r-1) sqrt(n) + sqrt(2r^2-4r+1) (t-1)^{1/4} sqrt(t)/(r-1) n^{1/4}.
/// The applicability threshold n >= (2r^2-4r+1)^2 / (4(t-2)) is defined only
/// for t >= 3; at t = 2 hypothesis_ok is left unset and the params carry
/// fact1_hypothesis_ok for the induced quadratic instead.
BoundReport spex_k2t_bound(double n, int r, int t);

/// Edge bound for hm-bipartite exact Berge-K_{s,t}-free, Berge-triangle-free
/// linear hypergraphs with head size m and mass size n, one value per
/// induction depth k in [0, t-2]:
/// (t-k-1)^{1/s}/(r-1) m n^{1-1/s} + (s-1)/(r-1) n^{1+k/s} + k m.
double hm_edge_bound(double m, double n, int r, int s, int t, int k);

/// Spectral bound for {Berge-K_{s,t}, Berge-triangle}-free linear
/// hypergraphs on n vertices; branches at s = 2.
BoundReport spex_kst_c3_bound(double n, int r, int s, int t);

/// Edge-count bound for the same family (spectral bound times n/r).
double ex_kst_c3_bound(double n, int r, int s, int t);

/// Exact-arithmetic comparison e <= ex_kst_c3_bound(n, r, 2, t) for the
/// s = 2 branch, with the square root eliminated by squaring; avoids float
/// ties for integer edge counts. Branches with s >= 3 mix distinct radicals
/// and fall back to the floating comparison at kBoundTol.
bool ex_kst_c3_holds_exact(std::int64_t e, std::int64_t n, int r, int t);

/// rho >= r e(H)/n (average degree), reported as a lower bound on rho.
BoundReport avg_degree_lower(const UniformHypergraph& h, double tol = kBoundTol,
                             const IterationOptions& opts = {});

/// Generalized binomial x(x-1)...(x-k+1)/k! for real x.
double generalized_binomial(double x, int k);

/// Combinatorial averaging inequality: if sum C(x_i, k) <= c C(x0, k) then
/// sum x_i <= x0 c^{1/k} n^{1-1/k} + (k-1) n, with n = |xs|.
BoundReport comb_ineq_check(std::span<const double> xs, double x0, double c, int k,
                            double tol = kBoundTol);

}  // namespace spexlin
