// spexlin: spectral and extremal analysis of r-uniform hypergraphs.
//
// Exit codes: 0 = success / bound holds / pattern not found;
//             1 = property violation / pattern found / iteration not converged;
//             2 = input error.

#include "spexlin/bounds.hpp"
#include "spexlin/canonical.hpp"
#include "spexlin/extremal.hpp"
#include "spexlin/io.hpp"
#include "spexlin/report_json.hpp"
#include "spexlin/shadow.hpp"
#include "spexlin/spectral.hpp"
#include "spexlin/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

using namespace spexlin;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct RunReport {
    std::vector<std::string> command;
    json inputs = json::array();
    json result;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void add_input(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        inputs.push_back({{"path", path}, {"fnv1a64", fnv1a64_hex(buf.str())}});
    }

    json envelope() const {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        return {{"tool", "spexlin"}, {"version", kVersion},   {"command", command},
                {"inputs", inputs},  {"result", result},      {"wall_ms", ms}};
    }
};

struct ParsedPattern {
    PatternGraph graph;
    std::optional<std::pair<int, int>> kst;  // set for complete bipartite specs
};

ParsedPattern parse_pattern_full(const std::string& text) {
    auto bail = [&]() -> ParsedPattern {
        throw input_error("unrecognized pattern '" + text +
                          "' (use c<k>, ck:<k>, k<s>,<t>, k<s>:<t>, kst:<s>,<t>, "
                          "path:<edges>, or file:<path>)");
    };
    auto num = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) bail();
            return v;
        } catch (const std::exception&) {
            bail();
        }
        return 0;
    };
    if (text.rfind("file:", 0) == 0) {
        auto h = load_hypergraph(text.substr(5));
        if (h.r() != 2) throw input_error("pattern file must be 2-uniform");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : h.edges()) edges.emplace_back(e[0], e[1]);
        return {PatternGraph{h.vertex_count(), std::move(edges)}, std::nullopt};
    }
    if (text.rfind("ck:", 0) == 0)
        return {PatternGraph::cycle(num(text.substr(3))), std::nullopt};
    if (text.rfind("kst:", 0) == 0) {
        auto rest = text.substr(4);
        auto sep = rest.find_first_of(",:");
        if (sep == std::string::npos) bail();
        int s = num(rest.substr(0, sep)), t = num(rest.substr(sep + 1));
        return {PatternGraph::complete_bipartite(s, t), std::make_pair(s, t)};
    }
    if (text.rfind("path:", 0) == 0)
        return {PatternGraph::path(num(text.substr(5))), std::nullopt};
    if (text.size() >= 2 && text[0] == 'c')
        return {PatternGraph::cycle(num(text.substr(1))), std::nullopt};
    if (text.size() >= 2 && text[0] == 'k') {
        auto rest = text.substr(1);
        auto sep = rest.find_first_of(",:");
        if (sep == std::string::npos) bail();
        int s = num(rest.substr(0, sep)), t = num(rest.substr(sep + 1));
        return {PatternGraph::complete_bipartite(s, t), std::make_pair(s, t)};
    }
    return bail();
}

PatternGraph parse_pattern(const std::string& text) { return parse_pattern_full(text).graph; }

std::vector<PatternGraph> parse_pattern_list(const std::string& csv) {
    std::vector<PatternGraph> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(parse_pattern(token));
    return out;
}

std::vector<Vertex> parse_id_list(const std::string& csv) {
    std::vector<Vertex> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(static_cast<Vertex>(std::stol(token)));
    return out;
}

std::map<std::string, std::string> parse_params(const std::string& csv) {
    std::map<std::string, std::string> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw input_error("bad parameter '" + token + "', expected key=value");
        out[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return out;
}

double need_num(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw input_error("missing parameter '" + key + "'");
    return std::stod(it->second);
}

int default_threads() {
    if (const char* env = std::getenv("SPEXLIN_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

struct CommonFlags {
    bool as_json = false;
};

void emit(const RunReport& report, const CommonFlags& common, const std::string& text) {
    if (common.as_json)
        std::cout << report.envelope().dump(2) << "\n";
    else
        std::cout << text;
}

// ---- subcommand payloads ----------------------------------------------------

struct SpectralArgs {
    std::string file;
    double tol = 1e-10;
    std::int64_t max_iter = 100000;
    bool vector = false;
};

int run_spectral(const SpectralArgs& args, const CommonFlags& common, RunReport& report) {
    report.add_input(args.file);
    auto h = load_hypergraph(args.file);
    auto spec = spectral_radius(h, IterationOptions{args.tol, args.max_iter});
    report.result = to_json(spec, args.vector);
    report.result["kind"] = "spectral";

    std::ostringstream text;
    text.precision(12);
    text << "rho = " << spec.rho << "\n"
         << "enclosure = [" << spec.bracket_lo << ", " << spec.bracket_hi << "]\n"
         << "iterations = " << spec.iterations << ", residual = " << spec.residual
         << (spec.converged ? "" : "  (NOT CONVERGED)") << "\n";
    if (args.vector) {
        text << "eigenvector =";
        for (double x : spec.eigenvector) text << ' ' << x;
        text << "\n";
    }
    emit(report, common, text.str());
    return spec.converged ? kExitOk : kExitViolation;
}

struct ShadowArgs {
    std::string file;
    bool rho = false;
    bool with_report = false;
    double tol = 1e-8;
};

int run_shadow(const ShadowArgs& args, const CommonFlags& common, RunReport& report) {
    report.add_input(args.file);
    auto h = load_hypergraph(args.file);
    auto g = two_shadow(h);

    json pairs = json::array();
    for (const auto& [pair, mult] : g.pairs())
        pairs.push_back({{"u", pair.first}, {"v", pair.second}, {"multiplicity", mult}});
    report.result = {{"kind", "shadow"}, {"n", g.vertex_count()}, {"pairs", pairs}};

    std::ostringstream text;
    text.precision(12);
    for (const auto& [pair, mult] : g.pairs())
        text << pair.first << ' ' << pair.second << " : " << mult << "\n";

    int status = kExitOk;
    if (args.rho || args.with_report) {
        auto spec = multigraph_spectral_radius(g);
        report.result["rho"] = spec.rho;
        text << "rho(shadow) = " << spec.rho << "\n";
        if (!spec.converged) status = kExitViolation;
    }
    if (args.with_report) {
        auto bound = check_shadow_bound(h, args.tol);
        report.result["bound_report"] = to_json(bound);
        text << "rho(H) = " << *bound.measured << " <= " << bound.bound_value
             << (bound.satisfied ? "  (holds)" : "  (VIOLATED)") << "\n";
        if (!bound.satisfied) status = kExitViolation;
    }
    emit(report, common, text.str());
    return status;
}

struct BergeArgs {
    std::string file;
    std::string pattern;
    std::string exact_head;
    bool witness = false;
    std::size_t max_pattern_edges = 12;
};

int run_berge(const BergeArgs& args, const CommonFlags& common, RunReport& report) {
    report.add_input(args.file);
    auto h = load_hypergraph(args.file);
    auto parsed = parse_pattern_full(args.pattern);
    const auto& f = parsed.graph;
    BergeOptions opts{args.max_pattern_edges};

    std::optional<BergeEmbedding> emb;
    if (!args.exact_head.empty()) {
        if (!parsed.kst)
            throw input_error("--exact-head requires a complete bipartite pattern (kst:s,t)");
        auto head = parse_id_list(args.exact_head);
        std::vector<char> in_head(static_cast<std::size_t>(h.vertex_count()), 0);
        for (Vertex v : head) {
            if (v < 0 || v >= h.vertex_count()) throw input_error("head vertex out of range");
            in_head[static_cast<std::size_t>(v)] = 1;
        }
        HmBipartition p;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            (in_head[static_cast<std::size_t>(v)] ? p.head : p.mass).push_back(v);
        emb = contains_exact_berge_kst(h, p, parsed.kst->first, parsed.kst->second, opts);
    } else {
        emb = contains_berge(h, f, opts);
    }

    report.result = {{"kind", "berge"}, {"pattern", args.pattern}, {"found", emb.has_value()}};
    std::ostringstream text;
    if (emb) {
        text << "found\n";
        if (args.witness) {
            json w{{"vertex_map", emb->vertex_map}, {"edge_map", emb->edge_map}};
            report.result["witness"] = w;
            text << "vertex map:";
            for (std::size_t i = 0; i < emb->vertex_map.size(); ++i)
                text << ' ' << i << "->" << emb->vertex_map[i];
            text << "\nedge map:";
            for (std::size_t i = 0; i < emb->edge_map.size(); ++i) {
                text << ' ' << i << "->{";
                const auto& e = h.edge(emb->edge_map[i]);
                for (std::size_t j = 0; j < e.size(); ++j) text << (j ? "," : "") << e[j];
                text << '}';
            }
            text << "\n";
        }
    } else {
        text << "not found\n";
    }
    emit(report, common, text.str());
    return emb ? kExitViolation : kExitOk;
}

struct BoundArgs {
    std::string name;
    std::string params;
    std::string input;
    bool strict = false;
    double tol = kBoundTol;
};

BoundReport eval_bound(const std::string& name, const std::map<std::string, std::string>& p) {
    if (name == "fact_root1") {
        double pp = need_num(p, "p"), q = need_num(p, "q");
        BoundReport r;
        r.name = name;
        r.params = {{"p", pp}, {"q", q}};
        r.bound_value = fact_root1(pp, q);
        r.hypothesis_ok = fact_root1_applicable(pp, q);
        r.with_measured(quadratic_positive_root(pp, q), kBoundTol);
        return r;
    }
    if (name == "fact_root2") {
        double pp = need_num(p, "p"), q = need_num(p, "q");
        BoundReport r;
        r.name = name;
        r.params = {{"p", pp}, {"q", q}};
        r.bound_value = fact_root2(pp, q);
        r.hypothesis_ok = true;
        r.with_measured(quadratic_positive_root(pp, q), kBoundTol);
        return r;
    }
    if (name == "spex_k2t")
        return spex_k2t_bound(need_num(p, "n"), static_cast<int>(need_num(p, "r")),
                              static_cast<int>(need_num(p, "t")));
    if (name == "hm_edge") {
        BoundReport r;
        r.name = name;
        double m = need_num(p, "m"), n = need_num(p, "n");
        int rr = static_cast<int>(need_num(p, "r")), s = static_cast<int>(need_num(p, "s")),
            t = static_cast<int>(need_num(p, "t")), k = static_cast<int>(need_num(p, "k"));
        r.params = {{"m", m}, {"n", n}, {"r", double(rr)}, {"s", double(s)},
                    {"t", double(t)}, {"k", double(k)}};
        r.bound_value = hm_edge_bound(m, n, rr, s, t, k);
        r.hypothesis_ok = true;
        return r;
    }
    if (name == "spex_kst_c3")
        return spex_kst_c3_bound(need_num(p, "n"), static_cast<int>(need_num(p, "r")),
                                 static_cast<int>(need_num(p, "s")),
                                 static_cast<int>(need_num(p, "t")));
    if (name == "ex_kst_c3") {
        BoundReport r;
        r.name = name;
        double n = need_num(p, "n");
        int rr = static_cast<int>(need_num(p, "r")), s = static_cast<int>(need_num(p, "s")),
            t = static_cast<int>(need_num(p, "t"));
        r.params = {{"n", n}, {"r", double(rr)}, {"s", double(s)}, {"t", double(t)}};
        r.bound_value = ex_kst_c3_bound(n, rr, s, t);
        r.hypothesis_ok = true;
        return r;
    }
    if (name == "comb_ineq") {
        auto xs_it = p.find("xs");
        if (xs_it == p.end()) throw input_error("missing parameter 'xs' (colon-separated)");
        std::vector<double> xs;
        std::istringstream in(xs_it->second);
        std::string tok;
        while (std::getline(in, tok, ':'))
            if (!tok.empty()) xs.push_back(std::stod(tok));
        return comb_ineq_check(xs, need_num(p, "x0"), need_num(p, "c"),
                               static_cast<int>(need_num(p, "k")));
    }
    throw input_error("unknown bound '" + name +
                      "' (eval names: fact_root1, fact_root2, spex_k2t, hm_edge, "
                      "spex_kst_c3, ex_kst_c3, comb_ineq)");
}

BoundReport verify_bound(const std::string& name, const UniformHypergraph& h,
                         const std::map<std::string, std::string>& p, bool strict, double tol) {
    auto require_free = [&](std::vector<PatternGraph> family) {
        if (!strict) return;
        auto res = is_family_free(h, family);
        if (!res.free)
            throw input_error("strict: input contains a forbidden pattern, bound not applicable");
    };
    if (name == "shadow_bound") return check_shadow_bound(h, tol);
    if (name == "avg_degree") return avg_degree_lower(h, tol);
    if (name == "walk_quadratic")
        return walk_quadratic_check(h, need_num(p, "P"), need_num(p, "Q"), tol);
    if (name == "degree_quadratic")
        return degree_quadratic_check(h, need_num(p, "P"), need_num(p, "Q"), tol);
    if (name == "k2t_degree") {
        int t = static_cast<int>(need_num(p, "t"));
        require_free({PatternGraph::complete_bipartite(2, t)});
        BoundReport r;
        r.name = name;
        r.params = {{"t", double(t)}, {"n", double(h.vertex_count())}, {"r", double(h.r())}};
        r.hypothesis_ok = true;
        r.bound_value = 0.0;
        r.satisfied = k2t_degree_hypothesis(h, t);
        return r;
    }
    if (name == "spex_k2t") {
        int t = static_cast<int>(need_num(p, "t"));
        require_free({PatternGraph::complete_bipartite(2, t)});
        auto r = spex_k2t_bound(h.vertex_count(), h.r(), t);
        r.with_measured(spectral_radius(h).rho, tol);
        return r;
    }
    if (name == "spex_kst_c3" || name == "ex_kst_c3") {
        int s = static_cast<int>(need_num(p, "s")), t = static_cast<int>(need_num(p, "t"));
        require_free({PatternGraph::complete_bipartite(s, t), PatternGraph::cycle(3)});
        if (name == "spex_kst_c3") {
            auto r = spex_kst_c3_bound(h.vertex_count(), h.r(), s, t);
            r.with_measured(spectral_radius(h).rho, tol);
            return r;
        }
        BoundReport r;
        r.name = name;
        r.params = {{"n", double(h.vertex_count())}, {"r", double(h.r())},
                    {"s", double(s)}, {"t", double(t)}};
        r.bound_value = ex_kst_c3_bound(h.vertex_count(), h.r(), s, t);
        r.hypothesis_ok = true;
        if (s == 2) {
            r.measured = static_cast<double>(h.edge_count());
            r.tolerance = 0.0;
            r.satisfied = ex_kst_c3_holds_exact(static_cast<std::int64_t>(h.edge_count()),
                                                h.vertex_count(), h.r(), t);
            r.slack = r.bound_value - *r.measured;
        } else {
            r.with_measured(static_cast<double>(h.edge_count()), tol);
        }
        return r;
    }
    throw input_error("unknown bound '" + name +
                      "' (verify names: shadow_bound, avg_degree, walk_quadratic, "
                      "degree_quadratic, k2t_degree, spex_k2t, spex_kst_c3, ex_kst_c3)");
}

int run_bound(const BoundArgs& args, bool is_verify, const CommonFlags& common,
              RunReport& report) {
    auto params = parse_params(args.params);
    BoundReport r;
    if (is_verify) {
        report.add_input(args.input);
        auto h = load_hypergraph(args.input);
        r = verify_bound(args.name, h, params, args.strict, args.tol);
    } else {
        r = eval_bound(args.name, params);
    }
    report.result = to_json(r);
    report.result["kind"] = "bound";

    std::ostringstream text;
    text.precision(12);
    text << r.name << ": bound = " << r.bound_value;
    if (r.measured) text << ", measured = " << *r.measured;
    if (r.hypothesis_ok) text << ", hypothesis " << (*r.hypothesis_ok ? "holds" : "fails");
    if (r.measured) text << ", " << (r.satisfied ? "satisfied" : "VIOLATED");
    text << "\n";
    emit(report, common, text.str());

    bool violation = is_verify && !r.satisfied && r.hypothesis_ok.value_or(true);
    return violation ? kExitViolation : kExitOk;
}

struct VerifyArgs {
    std::int64_t random_count = 0;
    std::uint64_t seed = 1;
    Vertex n = 8;
    int r = 3;
    std::size_t max_edges = 0;
    bool exhaustive = false;
    bool linear = false;
    bool connected = false;
    std::string forbid;
    std::string checks;
    bool strict = false;
    double tol = 1e-8;
};

int run_verify(const VerifyArgs& args, const CommonFlags& common, RunReport& report) {
    std::vector<std::string> checks;
    {
        std::istringstream in(args.checks);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) checks.push_back(tok);
    }
    if (checks.empty()) throw input_error("--checks is required (comma-separated names)");

    CorpusReport corpus;
    VerifyOptions options{args.strict, args.tol};
    if (args.exhaustive) {
        SearchSpec spec;
        spec.n = args.n;
        spec.r = args.r;
        spec.linear_only = args.linear;
        spec.forbidden = parse_pattern_list(args.forbid);
        spec.limits.max_edges = args.max_edges;
        std::vector<UniformHypergraph> corpus_items;
        enumerate_classes(spec, [&](const UniformHypergraph& h) {
            if (!args.connected || is_connected(h)) corpus_items.push_back(h);
            return true;
        });
        std::size_t next = 0;
        corpus = verify_corpus(
            [&]() -> std::optional<UniformHypergraph> {
                if (next >= corpus_items.size()) return std::nullopt;
                return corpus_items[next++];
            },
            checks, options);
    } else {
        if (args.random_count <= 0)
            throw input_error("choose --exhaustive or --random <count>");
        std::mt19937_64 seeds(args.seed);
        std::int64_t remaining = args.random_count;
        std::size_t cap = args.max_edges ? args.max_edges
                                         : static_cast<std::size_t>(args.n);
        corpus = verify_corpus(
            [&]() -> std::optional<UniformHypergraph> {
                if (remaining-- <= 0) return std::nullopt;
                return random_linear(args.n, args.r, seeds(), cap);
            },
            checks, options);
    }

    report.result = to_json(corpus);
    report.result["kind"] = "verify";

    std::ostringstream text;
    text << "corpus size: " << corpus.corpus_size << "\n";
    for (const auto& c : corpus.checks) {
        text << c.name << ": checked " << c.checked << ", skipped " << c.skipped
             << ", violations " << c.violations;
        if (std::isfinite(c.worst_slack)) text << ", worst slack " << c.worst_slack;
        text << "\n";
    }
    text << (corpus.ok() ? "OK" : "VIOLATIONS FOUND") << "\n";
    emit(report, common, text.str());
    return corpus.ok() ? kExitOk : kExitViolation;
}

struct ExtremalArgs {
    Vertex n = 0;
    int r = 3;
    bool linear = false;
    std::string forbid;
    std::string objective = "edges";
    std::int64_t budget_nodes = 0;
    std::int64_t budget_millis = 0;
    std::size_t max_edges = 0;
    int threads = 0;
    bool witnesses = false;
};

int run_extremal(const ExtremalArgs& args, const CommonFlags& common, RunReport& report) {
    SearchSpec spec;
    spec.n = args.n;
    spec.r = args.r;
    spec.linear_only = args.linear;
    spec.forbidden = parse_pattern_list(args.forbid);
    if (args.objective == "edges")
        spec.objective = Objective::edges;
    else if (args.objective == "rho")
        spec.objective = Objective::spectral_radius;
    else
        throw input_error("--objective must be edges or rho");
    spec.limits.max_nodes = args.budget_nodes;
    spec.limits.max_millis = args.budget_millis;
    spec.limits.max_edges = args.max_edges;
    spec.threads = args.threads > 0 ? args.threads : default_threads();

    auto result = enumerate_extremal(spec);
    report.result = to_json(result, args.objective.c_str());
    report.result["kind"] = "extremal";
    if (!args.witnesses) report.result.erase("witnesses");

    std::ostringstream text;
    text.precision(12);
    text << "optimum " << args.objective << " = " << result.optimum << "\n"
         << "nodes = " << result.nodes << (result.exhaustive ? "" : "  (budget hit)") << "\n"
         << "witnesses = " << result.witnesses.size() << "\n";
    if (args.witnesses)
        for (const auto& w : result.witnesses) {
            std::ostringstream one;
            write_hypergraph_text(one, w);
            text << one.str();
        }
    emit(report, common, text.str());
    return kExitOk;
}

struct GenArgs {
    Vertex n = 0;
    int r = 3;
    std::uint64_t seed = 1;
    std::size_t max_edges = 0;
    std::string out;
};

int run_gen(const GenArgs& args, const CommonFlags& common, RunReport& report) {
    std::size_t cap = args.max_edges ? args.max_edges : static_cast<std::size_t>(args.n);
    auto h = random_linear(args.n, args.r, args.seed, cap);
    report.result = to_json(h);
    report.result["kind"] = "gen";

    std::ostringstream text;
    write_hypergraph_text(text, h);
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) throw input_error("cannot write '" + args.out + "'");
        out << text.str();
        emit(report, common, "wrote " + args.out + "\n");
    } else {
        emit(report, common, text.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral and extremal analysis of r-uniform hypergraphs"};
    app.set_version_flag("--version", std::string("spexlin ") + kVersion);
    app.require_subcommand(1);

    CommonFlags common;
    RunReport report;
    for (int i = 1; i < argc; ++i) report.command.emplace_back(argv[i]);

    SpectralArgs spectral_args;
    auto* spectral_cmd = app.add_subcommand("spectral", "adjacency-tensor spectral radius");
    spectral_cmd->add_option("file", spectral_args.file)->required();
    spectral_cmd->add_option("--tol", spectral_args.tol);
    spectral_cmd->add_option("--max-iter", spectral_args.max_iter);
    spectral_cmd->add_flag("--vector", spectral_args.vector);

    ShadowArgs shadow_args;
    auto* shadow_cmd = app.add_subcommand("shadow", "2-shadow multigraph and its radius");
    shadow_cmd->add_option("file", shadow_args.file)->required();
    shadow_cmd->add_flag("--rho", shadow_args.rho);
    shadow_cmd->add_flag("--report", shadow_args.with_report);
    shadow_cmd->add_option("--tol", shadow_args.tol);

    BergeArgs berge_args;
    auto* berge_cmd = app.add_subcommand("berge-check", "Berge pattern containment");
    berge_cmd->add_option("file", berge_args.file)->required();
    berge_cmd->add_option("--pattern", berge_args.pattern)->required();
    berge_cmd->add_option("--exact-head", berge_args.exact_head);
    berge_cmd->add_flag("--witness", berge_args.witness);
    berge_cmd->add_option("--max-pattern-edges", berge_args.max_pattern_edges);

    BoundArgs bound_args;
    auto* bound_cmd = app.add_subcommand("bound", "closed-form bound evaluation");
    bound_cmd->require_subcommand(1);
    auto* bound_eval = bound_cmd->add_subcommand("eval", "evaluate a closed form");
    bound_eval->add_option("--name", bound_args.name)->required();
    bound_eval->add_option("--params", bound_args.params);
    auto* bound_verify = bound_cmd->add_subcommand("verify", "check a bound on an instance");
    bound_verify->add_option("--name", bound_args.name)->required();
    bound_verify->add_option("--input", bound_args.input)->required();
    bound_verify->add_option("--params", bound_args.params);
    bound_verify->add_flag("--strict", bound_args.strict);
    bound_verify->add_option("--tol", bound_args.tol);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run inequality checks over a corpus");
    verify_cmd->add_option("--random", verify_args.random_count);
    verify_cmd->add_option("--seed", verify_args.seed);
    verify_cmd->add_option("--n", verify_args.n);
    verify_cmd->add_option("--r", verify_args.r);
    verify_cmd->add_option("--max-edges", verify_args.max_edges);
    verify_cmd->add_flag("--exhaustive", verify_args.exhaustive);
    verify_cmd->add_flag("--linear", verify_args.linear);
    verify_cmd->add_flag("--connected", verify_args.connected);
    verify_cmd->add_option("--forbid", verify_args.forbid);
    verify_cmd->add_option("--checks", verify_args.checks);
    verify_cmd->add_flag("--strict", verify_args.strict);
    verify_cmd->add_option("--tol", verify_args.tol);

    ExtremalArgs extremal_args;
    auto* extremal_cmd = app.add_subcommand("extremal", "exhaustive extremal search");
    extremal_cmd->add_option("--n", extremal_args.n)->required();
    extremal_cmd->add_option("--r", extremal_args.r);
    extremal_cmd->add_flag("--linear", extremal_args.linear);
    extremal_cmd->add_option("--forbid", extremal_args.forbid);
    extremal_cmd->add_option("--objective", extremal_args.objective);
    extremal_cmd->add_option("--budget-nodes", extremal_args.budget_nodes);
    extremal_cmd->add_option("--budget-millis", extremal_args.budget_millis);
    extremal_cmd->add_option("--max-edges", extremal_args.max_edges);
    extremal_cmd->add_option("--threads", extremal_args.threads);
    extremal_cmd->add_flag("--witnesses", extremal_args.witnesses);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "random linear hypergraph");
    gen_cmd->add_option("--n", gen_args.n)->required();
    gen_cmd->add_option("--r", gen_args.r);
    gen_cmd->add_option("--seed", gen_args.seed);
    gen_cmd->add_option("--max-edges", gen_args.max_edges);
    gen_cmd->add_option("--out", gen_args.out);

    for (auto* cmd : {spectral_cmd, shadow_cmd, berge_cmd, bound_eval, bound_verify,
                      verify_cmd, extremal_cmd, gen_cmd})
        cmd->add_flag("--json", common.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*spectral_cmd) return run_spectral(spectral_args, common, report);
        if (*shadow_cmd) return run_shadow(shadow_args, common, report);
        if (*berge_cmd) return run_berge(berge_args, common, report);
        if (*bound_cmd) return run_bound(bound_args, bound_cmd->got_subcommand("verify"),
                                         common, report);
        if (*verify_cmd) return run_verify(verify_args, common, report);
        if (*extremal_cmd) return run_extremal(extremal_args, common, report);
        if (*gen_cmd) return run_gen(gen_args, common, report);
    } catch (const input_error& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInput;
    } catch (const capacity_error& err) {
        std::cerr << "capacity error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitViolation;
    }
    return kExitInput;
}
