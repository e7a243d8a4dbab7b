#include "spexlin/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace spexlin {

double fact_root1(double p, double q) {
    if (p <= 0 || q <= 0) throw input_error("fact_root1: requires p > 0 and q > 0");
    return std::sqrt(q) + std::sqrt(p) * std::pow(q, 0.25);
}

bool fact_root1_applicable(double p, double q) { return std::sqrt(q) >= p / 2; }

double fact_root2(double p, double q) {
    if (p <= 0) throw input_error("fact_root2: requires p > 0");
    if (q < 0) throw input_error("fact_root2: requires q >= 0");
    return p + q / p;
}

double quadratic_positive_root(double p, double q) {
    return 0.5 * (p + std::sqrt(p * p + 4 * q));
}

namespace {

BoundReport quadratic_rho_report(const char* name, const UniformHypergraph& h, double P,
                                 double Q, bool hypothesis, double tol,
                                 const IterationOptions& opts) {
    auto spec = spectral_radius(h, opts);
    if (!spec.converged)
        throw std::runtime_error(std::string(name) + ": spectral iteration did not converge");
    const double rm1 = h.r() - 1;

    BoundReport report;
    report.name = name;
    report.params = {{"r", static_cast<double>(h.r())},
                     {"n", static_cast<double>(h.vertex_count())},
                     {"P", P},
                     {"Q", Q}};
    report.hypothesis_ok = hypothesis;
    // rho^2 - (P/(r-1)) rho - Q/(r-1) <= 0 for rho >= 0 is rho <= positive root
    report.bound_value = quadratic_positive_root(P / rm1, Q / rm1);
    report.with_measured(spec.rho, tol);
    return report;
}

}  // namespace

BoundReport walk_quadratic_check(const UniformHypergraph& h, double P, double Q, double tol,
                                 const IterationOptions& opts) {
    if (!std::isfinite(P) || !std::isfinite(Q))
        throw input_error("walk_quadratic_check: P and Q must be finite");
    const double rm1 = h.r() - 1;
    bool hyp = true;
    for (Vertex u = 0; u < h.vertex_count() && hyp; ++u) {
        double w1 = static_cast<double>(count_walks(h, u, 1).total);
        double w2 = static_cast<double>(count_walks(h, u, 2).total);
        hyp = w2 <= P * w1 + rm1 * Q + 1e-12;
    }
    return quadratic_rho_report("walk_quadratic", h, P, Q, hyp, tol, opts);
}

double fit_min_Q(const UniformHypergraph& h, double P) {
    const double rm1 = h.r() - 1;
    double q = 0.0;
    for (Vertex u = 0; u < h.vertex_count(); ++u) {
        double w1 = static_cast<double>(count_walks(h, u, 1).total);
        double w2 = static_cast<double>(count_walks(h, u, 2).total);
        q = std::max(q, (w2 - P * w1) / rm1);
    }
    return q;
}

BoundReport degree_quadratic_check(const UniformHypergraph& h, double P, double Q, double tol,
                                   const IterationOptions& opts) {
    if (!h.is_linear()) throw input_error("degree_quadratic_check: input must be linear");
    if (!std::isfinite(P) || !std::isfinite(Q))
        throw input_error("degree_quadratic_check: P and Q must be finite");
    bool hyp = true;
    for (Vertex v = 0; v < h.vertex_count() && hyp; ++v) {
        double sum = 0.0;
        for (Vertex u : neighborhoods(h, v).dist1) sum += h.degree(u);
        hyp = sum <= P * h.degree(v) + Q + 1e-12;
    }
    return quadratic_rho_report("degree_quadratic", h, P, Q, hyp, tol, opts);
}

bool k2t_degree_hypothesis(const UniformHypergraph& h, int t) {
    if (!h.is_linear()) throw input_error("k2t_degree_hypothesis: input must be linear");
    if (t < 2) throw input_error("k2t_degree_hypothesis: t must be at least 2");
    const double r = h.r();
    const double coef = (2 * r * r - 4 * r + 1) * t;
    const double offset = (t - 1) * static_cast<double>(h.vertex_count()) / (r - 1);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        double sum = 0.0;
        for (Vertex u : neighborhoods(h, v).dist1) sum += h.degree(u);
        if (sum > coef * h.degree(v) + offset + 1e-12) return false;
    }
    return true;
}

BoundReport spex_k2t_bound(double n, int r, int t) {
    if (t < 2) throw input_error("spex_k2t_bound: t must be at least 2");
    if (r < 2) throw input_error("spex_k2t_bound: r must be at least 2");
    if (n < 1) throw input_error("spex_k2t_bound: n must be at least 1");

    const double a = 2.0 * r * r - 4.0 * r + 1.0;
    BoundReport report;
    report.name = "spex_k2t";
    report.params = {{"n", n}, {"r", static_cast<double>(r)}, {"t", static_cast<double>(t)}};
    report.bound_value = std::sqrt(static_cast<double>(t - 1)) / (r - 1) * std::sqrt(n) +
                         std::sqrt(a) * std::pow(t - 1.0, 0.25) * std::sqrt(static_cast<double>(t)) /
                             (r - 1) * std::pow(n, 0.25);
    if (t >= 3) {
        const double threshold = a * a / (4.0 * (t - 2));
        report.params.emplace_back("threshold", threshold);
        report.hypothesis_ok = n >= threshold;
    } else {
        // the threshold formula is singular at t = 2; report the applicability
        // of the underlying root bound on the induced quadratic instead
        const double p = a * t / (r - 1.0);
        const double q = (t - 1.0) * n / ((r - 1.0) * (r - 1.0));
        report.params.emplace_back("fact1_hypothesis_ok", fact_root1_applicable(p, q) ? 1.0 : 0.0);
    }
    return report;
}

double hm_edge_bound(double m, double n, int r, int s, int t, int k) {
    if (s < 2 || t < 2) throw input_error("hm_edge_bound: s and t must be at least 2");
    if (k < 0 || k > t - 2) throw input_error("hm_edge_bound: k out of range [0, t-2]");
    if (r < 2) throw input_error("hm_edge_bound: r must be at least 2");
    if (m < 0 || n < 1) throw input_error("hm_edge_bound: bad part sizes");
    const double sd = s;
    return std::pow(t - k - 1.0, 1.0 / sd) / (r - 1) * m * std::pow(n, 1.0 - 1.0 / sd) +
           (sd - 1.0) / (r - 1) * std::pow(n, 1.0 + k / sd) + k * m;
}

BoundReport spex_kst_c3_bound(double n, int r, int s, int t) {
    if (s < 2 || s > t) throw input_error("spex_kst_c3_bound: requires 2 <= s <= t");
    if (r < 2) throw input_error("spex_kst_c3_bound: r must be at least 2");
    if (n < 1) throw input_error("spex_kst_c3_bound: n must be at least 1");

    BoundReport report;
    report.name = "spex_kst_c3";
    report.params = {{"n", n},
                     {"r", static_cast<double>(r)},
                     {"s", static_cast<double>(s)},
                     {"t", static_cast<double>(t)}};
    report.hypothesis_ok = true;
    if (s == 2) {
        report.bound_value =
            (std::sqrt(4.0 * (t - 1) * (n - 1) + (r - t) * static_cast<double>(r - t)) + r - t) /
            (2.0 * (r - 1));
    } else {
        const double sd = s;
        report.bound_value = std::pow(t - s + 1.0, 1.0 / sd) / (r - 1) *
                                 std::pow(n, 1.0 - 1.0 / sd) +
                             (sd - 1.0) / (r - 1) * std::pow(n, 1.0 - 2.0 / sd) + s - 2.0;
    }
    return report;
}

double ex_kst_c3_bound(double n, int r, int s, int t) {
    if (s < 2 || s > t) throw input_error("ex_kst_c3_bound: requires 2 <= s <= t");
    if (r < 2) throw input_error("ex_kst_c3_bound: r must be at least 2");
    if (n < 1) throw input_error("ex_kst_c3_bound: n must be at least 1");
    if (s == 2) {
        return n *
               (std::sqrt(4.0 * (t - 1) * (n - 1) + (r - t) * static_cast<double>(r - t)) + r - t) /
               (2.0 * r * (r - 1));
    }
    const double sd = s;
    return std::pow(t - s + 1.0, 1.0 / sd) / (r * (r - 1.0)) * std::pow(n, 2.0 - 1.0 / sd) +
           (sd - 1.0) / (r * (r - 1.0)) * std::pow(n, 2.0 - 2.0 / sd) +
           (sd - 2.0) / r * n;
}

bool ex_kst_c3_holds_exact(std::int64_t e, std::int64_t n, int r, int t) {
    if (n < 1) throw input_error("ex_kst_c3_holds_exact: n must be at least 1");
    // e <= n (sqrt(D) + r - t) / (2 r (r-1)), D = 4(t-1)(n-1) + (r-t)^2
    // <=> 2 r (r-1) e - n (r-t) <= n sqrt(D)
    using I = __int128;
    const I D = I{4} * (t - 1) * (n - 1) + I{r - t} * (r - t);
    const I lhs = I{2} * r * (r - 1) * e - I{n} * (r - t);
    if (lhs <= 0) return true;
    return lhs * lhs <= I{n} * n * D;
}

BoundReport avg_degree_lower(const UniformHypergraph& h, double tol,
                             const IterationOptions& opts) {
    if (h.vertex_count() < 1) throw input_error("avg_degree_lower: empty vertex set");
    auto spec = spectral_radius(h, opts);
    if (!spec.converged)
        throw std::runtime_error("avg_degree_lower: spectral iteration did not converge");

    BoundReport report;
    report.name = "avg_degree";
    report.direction = BoundReport::Direction::lower;
    report.params = {{"r", static_cast<double>(h.r())},
                     {"n", static_cast<double>(h.vertex_count())},
                     {"e", static_cast<double>(h.edge_count())}};
    report.bound_value =
        static_cast<double>(h.r()) * static_cast<double>(h.edge_count()) / h.vertex_count();
    report.hypothesis_ok = true;
    report.with_measured(spec.rho, tol);
    return report;
}

double generalized_binomial(double x, int k) {
    if (k < 0) throw input_error("generalized_binomial: k must be nonnegative");
    double num = 1.0;
    for (int i = 0; i < k; ++i) num *= (x - i) / (i + 1);
    return num;
}

BoundReport comb_ineq_check(std::span<const double> xs, double x0, double c, int k, double tol) {
    if (k < 1) throw input_error("comb_ineq_check: k must be at least 1");
    const double n = static_cast<double>(xs.size());

    double lhs = 0.0, sum = 0.0;
    for (double x : xs) {
        lhs += generalized_binomial(x, k);
        sum += x;
    }
    const double rhs = c * generalized_binomial(x0, k);

    BoundReport report;
    report.name = "comb_ineq";
    report.params = {{"n", n}, {"x0", x0}, {"c", c}, {"k", static_cast<double>(k)},
                     {"binom_sum", lhs}, {"binom_cap", rhs}};
    report.hypothesis_ok = lhs <= rhs + tol * std::max(1.0, std::abs(rhs));
    report.bound_value = x0 * std::pow(c, 1.0 / k) * std::pow(n, 1.0 - 1.0 / k) + (k - 1) * n;
    report.with_measured(sum, tol * std::max(1.0, std::abs(report.bound_value)));
    return report;
}

}  // namespace spexlin
