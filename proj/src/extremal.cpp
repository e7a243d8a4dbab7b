#include "spexlin/extremal.hpp"

#include "spexlin/bounds.hpp"
#include "spexlin/canonical.hpp"
#include "spexlin/shadow.hpp"
#include "spexlin/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <chrono>
#include <cmath>
#include <deque>
#include <future>
#include <random>
#include <sstream>

namespace spexlin {

namespace {

constexpr std::size_t kPairBits = kEnumMaxVertices * kEnumMaxVertices;
using PairMask = std::bitset<kPairBits>;

std::size_t binomial_capped(Vertex n, int r, std::size_t cap) {
    std::size_t acc = 1;
    for (int i = 0; i < r; ++i) {
        acc = acc * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
        if (acc > cap) return cap + 1;
    }
    return acc;
}

std::vector<Edge> all_r_subsets(Vertex n, int r) {
    std::vector<Edge> out;
    Edge cur;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

PairMask pair_mask(const Edge& e, Vertex n) {
    PairMask m;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            m.set(static_cast<std::size_t>(e[i]) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(e[j]));
    return m;
}

struct Generator {
    const SearchSpec& spec;
    std::vector<Edge> candidates;
    std::vector<PairMask> masks;
    std::vector<char> head_flag;  // per vertex, when exact_forbidden is set

    std::int64_t nodes = 0;
    bool exhausted = true;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    explicit Generator(const SearchSpec& s) : spec(s) {
        if (s.n < 0 || s.r < 2) throw input_error("search spec: need n >= 0 and r >= 2");
        if (s.n > kEnumMaxVertices)
            throw capacity_error("exhaustive enumeration capped at n <= " +
                                 std::to_string(kEnumMaxVertices));
        if (binomial_capped(s.n, s.r, kEnumMaxCandidates) > kEnumMaxCandidates)
            throw capacity_error("exhaustive enumeration capped at C(n, r) <= " +
                                 std::to_string(kEnumMaxCandidates));
        if (s.n >= static_cast<Vertex>(s.r)) candidates = all_r_subsets(s.n, s.r);
        masks.reserve(candidates.size());
        for (const auto& e : candidates) masks.push_back(pair_mask(e, s.n));
        if (s.exact_forbidden) {
            head_flag.assign(static_cast<std::size_t>(s.n), 0);
            for (Vertex v : s.exact_forbidden->head) {
                if (v < 0 || v >= s.n) throw input_error("search spec: head vertex out of range");
                head_flag[static_cast<std::size_t>(v)] = 1;
            }
        }
        if (s.limits.max_millis > 0) {
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::milliseconds(s.limits.max_millis);
            has_deadline = true;
        }
    }

    bool edge_allowed(const Edge& e) const {
        if (!spec.exact_forbidden) return true;
        int in_head = 0;
        for (Vertex v : e) in_head += head_flag[static_cast<std::size_t>(v)];
        return in_head == 1;
    }

    bool budget_ok() {
        if (spec.limits.max_nodes > 0 && nodes >= spec.limits.max_nodes) {
            exhausted = false;
            return false;
        }
        if (has_deadline && (nodes & 0xff) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            exhausted = false;
            return false;
        }
        return true;
    }

    bool pattern_free(const UniformHypergraph& h) const {
        if (!is_family_free(h, spec.forbidden).free) return false;
        if (spec.exact_forbidden) {
            HmBipartition p;
            for (Vertex v = 0; v < spec.n; ++v)
                (head_flag[static_cast<std::size_t>(v)] ? p.head : p.mass).push_back(v);
            if (contains_exact_berge_kst(h, p, spec.exact_forbidden->s, spec.exact_forbidden->t))
                return false;
        }
        return true;
    }

    // visit(h, is_leaf): is_leaf when no extension was accepted. Returns
    // false to stop the whole walk.
    bool dfs(std::vector<Edge>& edges, PairMask used, std::size_t next_from,
             const std::function<bool(const UniformHypergraph&, bool)>& visit) {
        ++nodes;
        if (!budget_ok()) return false;

        bool any_child = false;
        if (spec.limits.max_edges == 0 || edges.size() < spec.limits.max_edges) {
            for (std::size_t i = next_from; i < candidates.size(); ++i) {
                if (spec.linear_only && (used & masks[i]).any()) continue;
                if (!edge_allowed(candidates[i])) continue;

                edges.push_back(candidates[i]);
                UniformHypergraph child(spec.r, spec.n, edges);
                bool keep = is_canonical(child) &&
                            (!spec.prune_patterns || pattern_free(child));
                if (keep) {
                    any_child = true;
                    if (!dfs(edges, used | masks[i], i + 1, visit)) {
                        edges.pop_back();
                        return false;
                    }
                }
                edges.pop_back();
            }
        }
        UniformHypergraph here(spec.r, spec.n, edges);
        if (spec.prune_patterns || pattern_free(here))
            if (!visit(here, !any_child)) return false;
        return true;
    }

    void run(const std::function<bool(const UniformHypergraph&, bool)>& visit) {
        std::vector<Edge> edges;
        dfs(edges, PairMask{}, 0, visit);
    }
};

}  // namespace

void enumerate_classes(const SearchSpec& spec,
                       const std::function<bool(const UniformHypergraph&)>& visit) {
    Generator gen(spec);
    gen.run([&](const UniformHypergraph& h, bool) { return visit(h); });
}

namespace {

struct Best {
    double value = -1.0;
    std::vector<UniformHypergraph> witnesses;

    void offer(const UniformHypergraph& h, double v) {
        if (v > value + 1e-9) {
            value = v;
            witnesses.clear();
            witnesses.push_back(h);
        } else if (v >= value - 1e-9) {
            witnesses.push_back(h);
        }
    }

    void merge(Best&& other) {
        if (other.value > value + 1e-9) {
            *this = std::move(other);
        } else if (other.value >= value - 1e-9) {
            for (auto& w : other.witnesses) witnesses.push_back(std::move(w));
        }
    }
};

double evaluate(const UniformHypergraph& h, Objective objective) {
    if (objective == Objective::edges) return static_cast<double>(h.edge_count());
    return spectral_radius(h).rho;
}

}  // namespace

SearchResult enumerate_extremal(const SearchSpec& spec) {
    SearchResult result;
    Best best;

    // With pattern pruning on, the rho maximum sits on classes with no
    // accepted extension (rho is edge-monotone), so only leaves need the
    // iteration. Without pruning, free classes can be interior nodes of the
    // structural tree, so every visited class is evaluated.
    auto evaluate_here = [&](bool leaf) {
        return spec.objective == Objective::edges || leaf || !spec.prune_patterns;
    };
    auto visit = [&](const UniformHypergraph& h, bool leaf) {
        if (evaluate_here(leaf)) best.offer(h, evaluate(h, spec.objective));
        return true;
    };

    Generator gen(spec);
    if (spec.threads <= 1) {
        gen.run(visit);
        result.nodes = gen.nodes;
        result.exhaustive = gen.exhausted;
    } else {
        // Split the generation tree: walk it breadth-limited until enough
        // independent (edge list, continuation index) seeds exist, then let
        // each worker finish its subtree. Merging in seed order keeps the
        // result deterministic.
        struct Seed {
            std::vector<Edge> edges;
            std::size_t next_from;
        };
        std::deque<Seed> frontier{{{}, 0}};
        const std::size_t want = static_cast<std::size_t>(spec.threads) * 4;
        while (!frontier.empty() && frontier.size() < want) {
            Seed seed = frontier.front();
            // Expanding the shallowest seed: children become new seeds, the
            // node itself is evaluated here.
            PairMask used;
            for (const auto& e : seed.edges) used |= pair_mask(e, spec.n);
            UniformHypergraph here(spec.r, spec.n, seed.edges);
            ++result.nodes;

            bool any_child = false;
            if (spec.limits.max_edges == 0 || seed.edges.size() < spec.limits.max_edges) {
                for (std::size_t i = seed.next_from; i < gen.candidates.size(); ++i) {
                    if (spec.linear_only && (used & gen.masks[i]).any()) continue;
                    if (!gen.edge_allowed(gen.candidates[i])) continue;
                    auto edges = seed.edges;
                    edges.push_back(gen.candidates[i]);
                    UniformHypergraph child(spec.r, spec.n, edges);
                    if (!is_canonical(child)) continue;
                    if (spec.prune_patterns && !gen.pattern_free(child)) continue;
                    any_child = true;
                    frontier.push_back({std::move(edges), i + 1});
                }
            }
            if (spec.prune_patterns || gen.pattern_free(here))
                if (evaluate_here(!any_child)) best.offer(here, evaluate(here, spec.objective));
            frontier.pop_front();
            if (frontier.size() >= want) break;
        }

        std::vector<std::future<std::pair<Best, std::int64_t>>> jobs;
        std::atomic<bool> timed_out{false};
        for (const auto& seed : frontier) {
            jobs.push_back(std::async(std::launch::async, [&, seed]() {
                Generator worker(spec);
                Best local;
                PairMask used;
                for (const auto& e : seed.edges) used |= pair_mask(e, spec.n);
                std::vector<Edge> edges = seed.edges;
                // The seed node itself was already counted during splitting;
                // only its strict extensions are explored here.
                worker.dfs(edges, used, seed.next_from,
                           [&](const UniformHypergraph& h, bool leaf) {
                               if (h.edge_count() == seed.edges.size()) return true;
                               if (evaluate_here(leaf))
                                   local.offer(h, evaluate(h, spec.objective));
                               return true;
                           });
                if (!worker.exhausted) timed_out = true;
                return std::make_pair(std::move(local), worker.nodes - 1);
            }));
        }
        for (auto& job : jobs) {
            auto [local, nodes] = job.get();
            best.merge(std::move(local));
            result.nodes += nodes;
        }
        result.exhaustive = !timed_out;
    }

    result.optimum = std::max(best.value, 0.0);
    for (auto& w : best.witnesses) result.witnesses.push_back(canonical_form(w));
    std::sort(result.witnesses.begin(), result.witnesses.end(),
              [](const UniformHypergraph& a, const UniformHypergraph& b) {
                  return a.edges() < b.edges();
              });
    result.witnesses.erase(std::unique(result.witnesses.begin(), result.witnesses.end()),
                           result.witnesses.end());
    return result;
}

UniformHypergraph random_linear(Vertex n, int r, std::uint64_t seed, std::size_t max_edges) {
    if (n < static_cast<Vertex>(r)) throw input_error("random_linear: need n >= r");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<char> used_pair(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);

    const std::size_t stall_cap = 50 * binomial_capped(n, r, 100000000);
    std::vector<Edge> edges;
    std::size_t stall = 0;
    std::vector<char> in_edge(static_cast<std::size_t>(n), 0);

    while (edges.size() < max_edges && stall < stall_cap) {
        Edge e;
        while (e.size() < static_cast<std::size_t>(r)) {
            Vertex v = pick(rng);
            if (!in_edge[static_cast<std::size_t>(v)]) {
                in_edge[static_cast<std::size_t>(v)] = 1;
                e.push_back(v);
            }
        }
        for (Vertex v : e) in_edge[static_cast<std::size_t>(v)] = 0;
        std::sort(e.begin(), e.end());

        bool ok = true;
        for (std::size_t i = 0; i < e.size() && ok; ++i)
            for (std::size_t j = i + 1; j < e.size() && ok; ++j)
                ok = !used_pair[static_cast<std::size_t>(e[i]) * n + e[j]];
        if (!ok) {
            ++stall;
            continue;
        }
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                used_pair[static_cast<std::size_t>(e[i]) * n + e[j]] = 1;
        edges.push_back(std::move(e));
        stall = 0;
    }
    return {r, n, std::move(edges)};
}

namespace {

struct ParsedCheck {
    std::string name;
    int s = 0;
    int t = 0;
};

ParsedCheck parse_check(const std::string& text) {
    ParsedCheck c;
    auto colon = text.find(':');
    c.name = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::string args = text.substr(colon + 1);
        std::replace(args.begin(), args.end(), ',', ' ');
        std::replace(args.begin(), args.end(), ':', ' ');
        std::istringstream in(args);
        if (c.name == "k2t_degree") {
            if (!(in >> c.t)) throw input_error("check " + c.name + ": expected :t");
        } else if (!(in >> c.s >> c.t)) {
            throw input_error("check " + c.name + ": expected :s,t");
        }
    }
    if (c.name == "k2t_degree" && c.t < 2)
        throw input_error("check k2t_degree: t must be at least 2");
    if ((c.name == "spex_kst_c3" || c.name == "ex_kst_c3") && (c.s < 2 || c.s > c.t))
        throw input_error("check " + c.name + ": requires 2 <= s <= t");
    return c;
}

}  // namespace

CorpusReport verify_corpus(const std::function<std::optional<UniformHypergraph>()>& source,
                           const std::vector<std::string>& checks,
                           const VerifyOptions& options) {
    std::vector<ParsedCheck> parsed;
    CorpusReport report;
    for (const auto& text : checks) {
        auto c = parse_check(text);
        static const char* known[] = {"shadow_bound", "avg_degree",  "walk_remark",
                                      "k2t_degree",   "spex_kst_c3", "ex_kst_c3",
                                      "c3_structure"};
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return c.name == k; }) == std::end(known))
            throw input_error("unknown check: " + c.name);
        parsed.push_back(c);
        CorpusCheckResult tally;
        tally.name = text;
        report.checks.push_back(std::move(tally));
    }

    std::vector<PatternGraph> triangle{PatternGraph::cycle(3)};

    while (auto maybe = source()) {
        const UniformHypergraph& h = *maybe;
        ++report.corpus_size;
        const bool linear = h.is_linear();

        for (std::size_t i = 0; i < parsed.size(); ++i) {
            const auto& check = parsed[i];
            auto& tally = report.checks[i];
            auto record = [&](bool ok, double slack) {
                ++tally.checked;
                tally.worst_slack = std::min(tally.worst_slack, slack);
                if (!ok) {
                    ++tally.violations;
                    if (!tally.first_violation) tally.first_violation = h;
                }
            };

            if (check.name == "shadow_bound") {
                auto r = check_shadow_bound(h, options.tol);
                record(r.satisfied, r.slack.value_or(0.0));
            } else if (check.name == "avg_degree") {
                auto r = avg_degree_lower(h, options.tol);
                record(r.satisfied, r.slack.value_or(0.0));
            } else if (check.name == "walk_remark") {
                const double cap = static_cast<double>(h.max_degree()) * (h.r() - 1);
                bool ok = true;
                double slack = std::numeric_limits<double>::infinity();
                for (Vertex u = 0; u < h.vertex_count(); ++u) {
                    double w1 = static_cast<double>(count_walks(h, u, 1).total);
                    double w2 = static_cast<double>(count_walks(h, u, 2).total);
                    slack = std::min(slack, cap * w1 - w2);
                    ok = ok && w2 <= cap * w1;
                }
                record(ok, h.vertex_count() ? slack : 0.0);
            } else if (check.name == "k2t_degree") {
                if (!linear) {
                    ++tally.skipped;
                    continue;
                }
                if (options.strict &&
                    contains_berge(h, PatternGraph::complete_bipartite(2, check.t))) {
                    ++tally.skipped;
                    continue;
                }
                record(k2t_degree_hypothesis(h, check.t), 0.0);
            } else if (check.name == "spex_kst_c3" || check.name == "ex_kst_c3") {
                if (!linear) {
                    ++tally.skipped;
                    continue;
                }
                if (options.strict) {
                    std::vector<PatternGraph> family{
                        PatternGraph::complete_bipartite(check.s, check.t),
                        PatternGraph::cycle(3)};
                    if (!is_family_free(h, family).free) {
                        ++tally.skipped;
                        continue;
                    }
                }
                if (check.name == "spex_kst_c3") {
                    auto bound = spex_kst_c3_bound(h.vertex_count(), h.r(), check.s, check.t);
                    bound.with_measured(spectral_radius(h).rho, options.tol);
                    record(bound.satisfied, bound.slack.value_or(0.0));
                } else {
                    double bound = ex_kst_c3_bound(h.vertex_count(), h.r(), check.s, check.t);
                    bool ok = check.s == 2
                                  ? ex_kst_c3_holds_exact(
                                        static_cast<std::int64_t>(h.edge_count()),
                                        h.vertex_count(), h.r(), check.t)
                                  : static_cast<double>(h.edge_count()) <= bound + options.tol;
                    record(ok, bound - static_cast<double>(h.edge_count()));
                }
            } else if (check.name == "c3_structure") {
                if (!linear) {
                    ++tally.skipped;
                    continue;
                }
                bool structure_everywhere = true;
                for (Vertex u = 0; u < h.vertex_count() && structure_everywhere; ++u)
                    structure_everywhere = c3free_neighborhood_structure(h, u);
                bool triangle_free = !contains_berge(h, triangle[0]);
                record(structure_everywhere == triangle_free, 0.0);
            }
        }
    }
    return report;
}

}  // namespace spexlin
