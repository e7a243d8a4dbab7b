#include "spexlin/bounds.hpp"
#include "spexlin/canonical.hpp"
#include "spexlin/extremal.hpp"
#include "spexlin/io.hpp"
#include "spexlin/shadow.hpp"
#include "spexlin/spectral.hpp"
#include "spexlin/version.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace spexlin;

namespace {

std::string hypergraph_repr(const UniformHypergraph& h) {
    std::ostringstream out;
    out << "Hypergraph(r=" << h.r() << ", n=" << h.vertex_count() << ", m=" << h.edge_count()
        << ")";
    return out.str();
}

SearchSpec make_spec(Vertex n, int r, bool linear, const std::vector<PatternGraph>& forbid,
                     const std::string& objective, std::int64_t max_nodes,
                     std::int64_t max_millis, std::size_t max_edges, int threads) {
    SearchSpec spec;
    spec.n = n;
    spec.r = r;
    spec.linear_only = linear;
    spec.forbidden = forbid;
    if (objective == "edges")
        spec.objective = Objective::edges;
    else if (objective == "rho")
        spec.objective = Objective::spectral_radius;
    else
        throw input_error("objective must be 'edges' or 'rho'");
    spec.limits.max_nodes = max_nodes;
    spec.limits.max_millis = max_millis;
    spec.limits.max_edges = max_edges;
    spec.threads = threads;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectral and extremal analysis of r-uniform hypergraphs";
    m.attr("__version__") = kVersion;

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);

    py::class_<UniformHypergraph>(m, "Hypergraph")
        .def(py::init<int, Vertex, std::vector<Edge>>(), py::arg("r"), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("r", &UniformHypergraph::r)
        .def_property_readonly("n", &UniformHypergraph::vertex_count)
        .def_property_readonly("edges", &UniformHypergraph::edges)
        .def("degree", &UniformHypergraph::degree, py::arg("v"))
        .def("max_degree", &UniformHypergraph::max_degree)
        .def("is_linear", &UniformHypergraph::is_linear)
        .def("is_regular", &UniformHypergraph::is_regular)
        .def("__len__", &UniformHypergraph::edge_count)
        .def("__eq__", [](const UniformHypergraph& a, const UniformHypergraph& b) { return a == b; })
        .def("__repr__", &hypergraph_repr);

    py::class_<WalkTable>(m, "WalkTable")
        .def_readonly("source", &WalkTable::source)
        .def_readonly("length", &WalkTable::length)
        .def_readonly("counts", &WalkTable::counts)
        .def_readonly("total", &WalkTable::total);

    m.def("count_walks",
          [](const UniformHypergraph& h, Vertex u, int k) { return count_walks(h, u, k); },
          py::arg("h"), py::arg("u"), py::arg("k"));
    m.def("neighborhoods", [](const UniformHypergraph& h, Vertex u) {
        auto nb = neighborhoods(h, u);
        return py::make_tuple(nb.dist1, nb.dist2);
    });
    m.def("components", &components);
    m.def("is_connected", &is_connected);
    m.def("induced", [](const UniformHypergraph& h, const std::vector<Vertex>& s) {
        auto sub = induced(h, s);
        return py::make_tuple(sub.hypergraph, sub.vertex_ids);
    });
    m.def("cross", [](const UniformHypergraph& h, const std::vector<Vertex>& s,
                      const std::vector<Vertex>& t) {
        auto sub = cross(h, s, t);
        return py::make_tuple(sub.hypergraph, sub.vertex_ids);
    });
    m.def("check_hm_bipartite",
          [](const UniformHypergraph& h, const std::vector<Vertex>& head,
             const std::vector<Vertex>& mass) {
              return check_hm_bipartite(h, HmBipartition{head, mass});
          },
          py::arg("h"), py::arg("head"), py::arg("mass"));

    m.def("canonical_form", &canonical_form);
    m.def("is_isomorphic", &is_isomorphic);

    py::class_<SpectralResult>(m, "SpectralResult")
        .def_readonly("rho", &SpectralResult::rho)
        .def_readonly("eigenvector", &SpectralResult::eigenvector)
        .def_readonly("iterations", &SpectralResult::iterations)
        .def_readonly("residual", &SpectralResult::residual)
        .def_readonly("converged", &SpectralResult::converged)
        .def_readonly("bracket_lo", &SpectralResult::bracket_lo)
        .def_readonly("bracket_hi", &SpectralResult::bracket_hi)
        .def("__repr__", [](const SpectralResult& s) {
            std::ostringstream out;
            out << "SpectralResult(rho=" << s.rho << ", converged=" << s.converged << ")";
            return out.str();
        });

    m.def("apply_adjacency",
          [](const UniformHypergraph& h, const std::vector<double>& x) {
              return apply_adjacency(h, x);
          });
    m.def("spectral_radius",
          [](const UniformHypergraph& h, double tol, std::int64_t max_iter) {
              return spectral_radius(h, IterationOptions{tol, max_iter});
          },
          py::arg("h"), py::arg("tol") = 1e-10, py::arg("max_iter") = 100000);
    m.def("residual",
          [](const UniformHypergraph& h, double rho, const std::vector<double>& x) {
              return residual(h, rho, x);
          });

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init<Vertex>(), py::arg("n"))
        .def_property_readonly("n", &Multigraph::vertex_count)
        .def("add", &Multigraph::add, py::arg("u"), py::arg("v"), py::arg("count") = 1)
        .def("multiplicity", &Multigraph::multiplicity)
        .def("pairs",
             [](const Multigraph& g) {
                 std::vector<std::tuple<Vertex, Vertex, int>> out;
                 for (const auto& [pair, mult] : g.pairs())
                     out.emplace_back(pair.first, pair.second, mult);
                 return out;
             })
        .def("__repr__", [](const Multigraph& g) {
            std::ostringstream out;
            out << "Multigraph(n=" << g.vertex_count() << ", pairs=" << g.pair_count() << ")";
            return out.str();
        });

    m.def("two_shadow", &two_shadow);
    m.def("multigraph_spectral_radius",
          [](const Multigraph& g, double tol, std::int64_t max_iter) {
              return multigraph_spectral_radius(g, IterationOptions{tol, max_iter});
          },
          py::arg("g"), py::arg("tol") = 1e-10, py::arg("max_iter") = 100000);
    m.def("check_shadow_bound",
          [](const UniformHypergraph& h, double tol) { return check_shadow_bound(h, tol); },
          py::arg("h"), py::arg("tol") = 1e-8);
    m.def("c3free_neighborhood_structure", &c3free_neighborhood_structure);

    py::class_<PatternGraph>(m, "Pattern")
        .def(py::init<Vertex, std::vector<std::pair<Vertex, Vertex>>>(), py::arg("nv"),
             py::arg("edges"))
        .def_static("single_edge", &PatternGraph::single_edge)
        .def_static("path", &PatternGraph::path, py::arg("edge_count"))
        .def_static("cycle", &PatternGraph::cycle, py::arg("k"))
        .def_static("complete_bipartite", &PatternGraph::complete_bipartite, py::arg("s"),
                    py::arg("t"))
        .def_readonly("nv", &PatternGraph::nv)
        .def_readonly("edges", &PatternGraph::edges)
        .def("degree", &PatternGraph::degree);

    py::class_<BergeEmbedding>(m, "BergeEmbedding")
        .def_readonly("vertex_map", &BergeEmbedding::vertex_map)
        .def_readonly("edge_map", &BergeEmbedding::edge_map);

    m.def("contains_berge",
          [](const UniformHypergraph& h, const PatternGraph& f) -> py::object {
              auto emb = contains_berge(h, f);
              return emb ? py::cast(*emb) : py::none();
          },
          py::arg("h"), py::arg("pattern"));
    m.def("is_family_free",
          [](const UniformHypergraph& h, const std::vector<PatternGraph>& patterns) {
              return is_family_free(h, patterns).free;
          });
    m.def("expansion", &expansion, py::arg("pattern"), py::arg("r"));
    m.def("enumerate_berge_family", &enumerate_berge_family, py::arg("pattern"), py::arg("r"));
    m.def("contains_exact_berge_kst",
          [](const UniformHypergraph& h, const std::vector<Vertex>& head,
             const std::vector<Vertex>& mass, int s, int t) -> py::object {
              auto emb = contains_exact_berge_kst(h, HmBipartition{head, mass}, s, t);
              return emb ? py::cast(*emb) : py::none();
          },
          py::arg("h"), py::arg("head"), py::arg("mass"), py::arg("s"), py::arg("t"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("name", &BoundReport::name)
        .def_property_readonly("params",
                               [](const BoundReport& r) {
                                   py::dict d;
                                   for (const auto& [k, v] : r.params) d[k.c_str()] = v;
                                   return d;
                               })
        .def_readonly("bound_value", &BoundReport::bound_value)
        .def_property_readonly("measured",
                               [](const BoundReport& r) -> py::object {
                                   return r.measured ? py::cast(*r.measured) : py::none();
                               })
        .def_property_readonly("hypothesis_ok",
                               [](const BoundReport& r) -> py::object {
                                   return r.hypothesis_ok ? py::cast(*r.hypothesis_ok)
                                                          : py::none();
                               })
        .def_readonly("satisfied", &BoundReport::satisfied)
        .def_property_readonly("slack",
                               [](const BoundReport& r) -> py::object {
                                   return r.slack ? py::cast(*r.slack) : py::none();
                               })
        .def("__repr__", [](const BoundReport& r) {
            std::ostringstream out;
            out << "BoundReport(name=" << r.name << ", bound=" << r.bound_value
                << ", satisfied=" << r.satisfied << ")";
            return out.str();
        });

    m.def("fact_root1", &fact_root1);
    m.def("fact_root1_applicable", &fact_root1_applicable);
    m.def("fact_root2", &fact_root2);
    m.def("quadratic_positive_root", &quadratic_positive_root);
    m.def("walk_quadratic_check",
          [](const UniformHypergraph& h, double P, double Q) {
              return walk_quadratic_check(h, P, Q);
          });
    m.def("fit_min_Q", &fit_min_Q);
    m.def("degree_quadratic_check",
          [](const UniformHypergraph& h, double P, double Q) {
              return degree_quadratic_check(h, P, Q);
          });
    m.def("k2t_degree_hypothesis", &k2t_degree_hypothesis);
    m.def("spex_k2t_bound", &spex_k2t_bound, py::arg("n"), py::arg("r"), py::arg("t"));
    m.def("hm_edge_bound", &hm_edge_bound, py::arg("m"), py::arg("n"), py::arg("r"),
          py::arg("s"), py::arg("t"), py::arg("k"));
    m.def("spex_kst_c3_bound", &spex_kst_c3_bound, py::arg("n"), py::arg("r"), py::arg("s"),
          py::arg("t"));
    m.def("ex_kst_c3_bound", &ex_kst_c3_bound, py::arg("n"), py::arg("r"), py::arg("s"),
          py::arg("t"));
    m.def("ex_kst_c3_holds_exact", &ex_kst_c3_holds_exact, py::arg("e"), py::arg("n"),
          py::arg("r"), py::arg("t"));
    m.def("avg_degree_lower",
          [](const UniformHypergraph& h) { return avg_degree_lower(h); });
    m.def("generalized_binomial", &generalized_binomial);
    m.def("comb_ineq_check",
          [](const std::vector<double>& xs, double x0, double c, int k) {
              return comb_ineq_check(xs, x0, c, k);
          });

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("optimum", &SearchResult::optimum)
        .def_readonly("witnesses", &SearchResult::witnesses)
        .def_readonly("nodes", &SearchResult::nodes)
        .def_readonly("exhaustive", &SearchResult::exhaustive);

    m.def("enumerate_extremal",
          [](Vertex n, int r, bool linear, const std::vector<PatternGraph>& forbid,
             const std::string& objective, std::int64_t max_nodes, std::int64_t max_millis,
             std::size_t max_edges, int threads) {
              return enumerate_extremal(make_spec(n, r, linear, forbid, objective, max_nodes,
                                                  max_millis, max_edges, threads));
          },
          py::arg("n"), py::arg("r"), py::arg("linear") = false,
          py::arg("forbid") = std::vector<PatternGraph>{}, py::arg("objective") = "edges",
          py::arg("max_nodes") = 0, py::arg("max_millis") = 0, py::arg("max_edges") = 0,
          py::arg("threads") = 1);
    m.def("enumerate_classes",
          [](Vertex n, int r, bool linear, const std::vector<PatternGraph>& forbid,
             std::size_t max_edges, const std::function<bool(const UniformHypergraph&)>& visit) {
              enumerate_classes(make_spec(n, r, linear, forbid, "edges", 0, 0, max_edges, 1),
                                visit);
          },
          py::arg("n"), py::arg("r"), py::arg("linear") = false,
          py::arg("forbid") = std::vector<PatternGraph>{}, py::arg("max_edges") = 0,
          py::arg("visit"));
    m.def("random_linear", &random_linear, py::arg("n"), py::arg("r"), py::arg("seed"),
          py::arg("max_edges"));
    m.def("verify_corpus",
          [](const std::vector<UniformHypergraph>& corpus,
             const std::vector<std::string>& checks, bool strict, double tol) {
              std::size_t next = 0;
              auto report = verify_corpus(
                  [&]() -> std::optional<UniformHypergraph> {
                      if (next >= corpus.size()) return std::nullopt;
                      return corpus[next++];
                  },
                  checks, VerifyOptions{strict, tol});
              py::dict out;
              out["corpus_size"] = report.corpus_size;
              out["ok"] = report.ok();
              py::list items;
              for (const auto& c : report.checks) {
                  py::dict item;
                  item["name"] = c.name;
                  item["checked"] = c.checked;
                  item["skipped"] = c.skipped;
                  item["violations"] = c.violations;
                  item["worst_slack"] = std::isfinite(c.worst_slack)
                                            ? py::cast(c.worst_slack)
                                            : py::object(py::none());
                  item["first_violation"] = c.first_violation
                                                ? py::cast(*c.first_violation)
                                                : py::object(py::none());
                  items.append(std::move(item));
              }
              out["checks"] = std::move(items);
              return out;
          },
          py::arg("corpus"), py::arg("checks"), py::arg("strict") = false,
          py::arg("tol") = 1e-8);

    m.def("load_hypergraph", &load_hypergraph, py::arg("path"));
    m.def("parse_hypergraph", [](const std::string& text) {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            return parse_hypergraph_json(text);
        std::istringstream in(text);
        return parse_hypergraph_text(in);
    });
    m.def("to_text", [](const UniformHypergraph& h) {
        std::ostringstream out;
        write_hypergraph_text(out, h);
        return out.str();
    });
    m.def("to_json", &hypergraph_to_json);
}
