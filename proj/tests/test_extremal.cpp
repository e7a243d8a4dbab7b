#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spexlin/canonical.hpp"
#include "spexlin/extremal.hpp"
#include "spexlin/spectral.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>

using namespace spexlin;

namespace {

// Counts isomorphism classes (optionally filtered) by raw subset enumeration
// and brute-force dedup.
std::size_t classes_brute(Vertex n, int r, bool linear_only,
                          const std::vector<PatternGraph>& forbidden) {
    std::vector<Edge> all;
    Edge cur;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(cur.size()) == r) {
            all.push_back(cur);
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    std::set<std::vector<Edge>> seen;
    const std::size_t total = static_cast<std::size_t>(1) << all.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask & (static_cast<std::size_t>(1) << i)) edges.push_back(all[i]);
        UniformHypergraph h(r, n, edges);
        if (linear_only && !h.is_linear()) continue;
        bool free = true;
        for (const auto& f : forbidden) free = free && !oracle::berge_brute(h, f);
        if (!free) continue;
        seen.insert(canonical_form(h).edges());
    }
    return seen.size();
}

std::size_t classes_generated(const SearchSpec& spec) {
    std::size_t count = 0;
    enumerate_classes(spec, [&](const UniformHypergraph&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace

TEST_CASE("orderly generation visits each class exactly once") {
    for (Vertex n = 1; n <= 5; ++n) {
        SearchSpec spec;
        spec.n = n;
        spec.r = 2;
        spec.linear_only = false;
        CHECK(classes_generated(spec) == classes_brute(n, 2, false, {}));
    }
    for (Vertex n = 3; n <= 6; ++n) {
        SearchSpec spec;
        spec.n = n;
        spec.r = 3;
        spec.linear_only = true;
        CHECK(classes_generated(spec) == classes_brute(n, 3, true, {}));
    }
    SUBCASE("with a forbidden pattern") {
        SearchSpec spec;
        spec.n = 5;
        spec.r = 3;
        spec.linear_only = true;
        spec.forbidden = {PatternGraph::cycle(3)};
        CHECK(classes_generated(spec) == classes_brute(5, 3, true, spec.forbidden));
    }
}

TEST_CASE("every generated class is canonical and satisfies the constraints") {
    SearchSpec spec;
    spec.n = 6;
    spec.r = 3;
    spec.linear_only = true;
    spec.forbidden = {PatternGraph::complete_bipartite(2, 2)};
    enumerate_classes(spec, [&](const UniformHypergraph& h) {
        CHECK(is_canonical(h));
        CHECK(h.is_linear());
        CHECK_FALSE(contains_berge(h, spec.forbidden[0]).has_value());
        return true;
    });
}

TEST_CASE("mantel: triangle-free graphs have at most n^2/4 edges") {
    for (Vertex n = 3; n <= 7; ++n) {
        SearchSpec spec;
        spec.n = n;
        spec.r = 2;
        spec.forbidden = {PatternGraph::cycle(3)};
        spec.objective = Objective::edges;
        auto result = enumerate_extremal(spec);
        CHECK(result.exhaustive);
        CHECK(result.optimum == doctest::Approx(static_cast<double>((n * n) / 4)));
        for (const auto& w : result.witnesses)
            CHECK(w.edge_count() == static_cast<std::size_t>((n * n) / 4));
    }
}

TEST_CASE("max partial triple system on 7 points is the full 7-line plane") {
    SearchSpec spec;
    spec.n = 7;
    spec.r = 3;
    spec.linear_only = true;
    spec.objective = Objective::edges;
    auto result = enumerate_extremal(spec);
    CHECK(result.exhaustive);
    CHECK(result.optimum == doctest::Approx(7.0));
    REQUIRE(!result.witnesses.empty());
    for (const auto& w : result.witnesses) CHECK(is_isomorphic(w, fixtures::fano()));
}

TEST_CASE("spectral objective stays under the closed-form ceiling at n=7") {
    SearchSpec spec;
    spec.n = 7;
    spec.r = 3;
    spec.linear_only = true;
    spec.forbidden = {PatternGraph::cycle(3), PatternGraph::complete_bipartite(2, 2)};
    spec.objective = Objective::spectral_radius;
    auto result = enumerate_extremal(spec);
    CHECK(result.exhaustive);
    CHECK(result.optimum <= 1.5 + 1e-9);
    CHECK(result.optimum > 1.0);  // at least the loose star is in the class
    for (const auto& w : result.witnesses)
        CHECK(spectral_radius(w).rho == doctest::Approx(result.optimum).epsilon(1e-8));
}

TEST_CASE("pruning soundness: leaf-only pattern checking gives the same optimum") {
    for (Vertex n = 4; n <= 6; ++n) {
        SearchSpec spec;
        spec.n = n;
        spec.r = 3;
        spec.linear_only = true;
        spec.forbidden = {PatternGraph::cycle(3)};
        spec.objective = Objective::edges;
        auto pruned = enumerate_extremal(spec);
        spec.prune_patterns = false;
        auto unpruned = enumerate_extremal(spec);
        CHECK(pruned.optimum == unpruned.optimum);

        spec.objective = Objective::spectral_radius;
        auto unpruned_rho = enumerate_extremal(spec);
        spec.prune_patterns = true;
        auto pruned_rho = enumerate_extremal(spec);
        CHECK(pruned_rho.optimum == doctest::Approx(unpruned_rho.optimum).epsilon(1e-10));
    }
}

TEST_CASE("parallel search matches sequential") {
    SearchSpec spec;
    spec.n = 7;
    spec.r = 3;
    spec.linear_only = true;
    spec.forbidden = {PatternGraph::cycle(3)};
    spec.objective = Objective::edges;
    auto seq = enumerate_extremal(spec);
    spec.threads = 4;
    auto par = enumerate_extremal(spec);
    CHECK(seq.optimum == par.optimum);
    REQUIRE(seq.witnesses.size() == par.witnesses.size());
    for (std::size_t i = 0; i < seq.witnesses.size(); ++i)
        CHECK(seq.witnesses[i] == par.witnesses[i]);

    spec.objective = Objective::spectral_radius;
    spec.threads = 1;
    auto seq_rho = enumerate_extremal(spec);
    spec.threads = 3;
    auto par_rho = enumerate_extremal(spec);
    CHECK(seq_rho.optimum == doctest::Approx(par_rho.optimum).epsilon(1e-12));
}

TEST_CASE("node budget truncates and is flagged") {
    SearchSpec spec;
    spec.n = 7;
    spec.r = 3;
    spec.linear_only = true;
    spec.objective = Objective::edges;
    spec.limits.max_nodes = 5;
    auto result = enumerate_extremal(spec);
    CHECK_FALSE(result.exhaustive);
    CHECK(result.nodes <= 5);
}

TEST_CASE("max_edges cap restricts the tree") {
    SearchSpec spec;
    spec.n = 6;
    spec.r = 3;
    spec.linear_only = true;
    spec.limits.max_edges = 2;
    std::size_t biggest = 0;
    enumerate_classes(spec, [&](const UniformHypergraph& h) {
        biggest = std::max(biggest, h.edge_count());
        return true;
    });
    CHECK(biggest == 2);
}

TEST_CASE("exact-forbidden head constraint shapes generation") {
    SearchSpec spec;
    spec.n = 6;
    spec.r = 3;
    spec.linear_only = true;
    spec.exact_forbidden = ExactForbidden{{0, 1}, 2, 2};
    enumerate_classes(spec, [&](const UniformHypergraph& h) {
        for (const auto& e : h.edges()) {
            int in_head = 0;
            for (Vertex v : e) in_head += (v <= 1);
            CHECK(in_head == 1);
        }
        HmBipartition p{{0, 1}, {2, 3, 4, 5}};
        CHECK_FALSE(contains_exact_berge_kst(h, p, 2, 2).has_value());
        return true;
    });
}

TEST_CASE("frozen class counts on exactly-n vertex sets") {
    // cross-checked against an independent permutation-orbit enumeration
    auto count = [](Vertex n, std::vector<PatternGraph> forbid) {
        SearchSpec spec;
        spec.n = n;
        spec.r = 3;
        spec.linear_only = true;
        spec.forbidden = std::move(forbid);
        std::size_t classes = 0;
        enumerate_classes(spec, [&](const UniformHypergraph&) {
            ++classes;
            return true;
        });
        return classes;
    };
    CHECK(count(6, {}) == 6);
    CHECK(count(7, {}) == 14);
    CHECK(count(8, {}) == 32);
    CHECK(count(7, {PatternGraph::complete_bipartite(2, 2)}) == 8);
}

TEST_CASE("generation order is stable across reruns") {
    SearchSpec spec;
    spec.n = 7;
    spec.r = 3;
    spec.linear_only = true;
    auto collect = [&] {
        std::vector<std::vector<Edge>> out;
        enumerate_classes(spec, [&](const UniformHypergraph& h) {
            out.push_back(h.edges());
            return true;
        });
        return out;
    };
    auto first = collect();
    CHECK(first == collect());
    CHECK(first.size() == 14);  // cross-checked against an independent enumeration
}

TEST_CASE("capacity guards") {
    SearchSpec spec;
    spec.n = 13;
    spec.r = 3;
    CHECK_THROWS_AS(enumerate_classes(spec, [](const UniformHypergraph&) { return true; }),
                    capacity_error);
}

TEST_CASE("random_linear") {
    SUBCASE("n = r gives exactly the one possible edge") {
        auto h = random_linear(3, 3, 42, 5);
        CHECK(h.edge_count() == 1);
    }
    SUBCASE("always linear, within the pair-count ceiling") {
        std::mt19937_64 seeds(1);
        for (int trial = 0; trial < 50; ++trial) {
            auto h = random_linear(7, 3, seeds(), 100);
            CHECK(h.is_linear());
            CHECK(h.edge_count() <= 7 * 6 / (3 * 2));
        }
    }
    SUBCASE("deterministic in the seed") {
        auto a = random_linear(10, 3, 777, 8);
        auto b = random_linear(10, 3, 777, 8);
        CHECK(a == b);
        auto c = random_linear(10, 3, 778, 8);
        CHECK(a.vertex_count() == c.vertex_count());  // same shape, likely different edges
    }
    CHECK_THROWS_AS(random_linear(2, 3, 0, 1), input_error);
}

TEST_CASE("verify_corpus") {
    SUBCASE("random corpus passes the unconditional checks") {
        std::mt19937_64 seeds(5150);
        int remaining = 60;
        auto source = [&]() -> std::optional<UniformHypergraph> {
            if (remaining-- <= 0) return std::nullopt;
            return random_linear(10, 3, seeds(), 6);
        };
        auto report = verify_corpus(source, {"shadow_bound", "avg_degree", "walk_remark"});
        CHECK(report.corpus_size == 60);
        CHECK(report.ok());
        for (const auto& c : report.checks) CHECK(c.checked == 60);
    }
    SUBCASE("empty corpus is a success") {
        auto report = verify_corpus([]() { return std::optional<UniformHypergraph>{}; },
                                    {"shadow_bound"});
        CHECK(report.ok());
        CHECK(report.corpus_size == 0);
    }
    SUBCASE("conditional checks skip inapplicable inputs under strict mode") {
        bool sent = false;
        auto source = [&]() -> std::optional<UniformHypergraph> {
            if (sent) return std::nullopt;
            sent = true;
            return fixtures::fano();  // contains a Berge triangle
        };
        auto report = verify_corpus(source, {"spex_kst_c3:2,2"}, {.strict = true, .tol = 1e-8});
        CHECK(report.checks[0].skipped == 1);
        CHECK(report.checks[0].checked == 0);
    }
    SUBCASE("unknown check name") {
        CHECK_THROWS_AS(verify_corpus([]() { return std::optional<UniformHypergraph>{}; },
                                      {"bogus"}),
                        input_error);
    }
}
