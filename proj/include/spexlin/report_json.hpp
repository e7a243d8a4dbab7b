#pragma once

#include "spexlin/extremal.hpp"
#include "spexlin/hypergraph.hpp"
#include "spexlin/report.hpp"
#include "spexlin/spectral.hpp"

#include <json.hpp>

namespace spexlin {

inline nlohmann::json to_json(const UniformHypergraph& h) {
    return {{"r", h.r()}, {"n", h.vertex_count()}, {"edges", h.edges()}};
}

inline nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    nlohmann::json out{
        {"name", r.name},
        {"params", params},
        {"bound_value", r.bound_value},
        {"satisfied", r.satisfied},
        {"direction", r.direction == BoundReport::Direction::upper ? "upper" : "lower"},
        {"tolerance", r.tolerance},
    };
    out["measured"] = r.measured ? nlohmann::json(*r.measured) : nlohmann::json();
    out["hypothesis_ok"] = r.hypothesis_ok ? nlohmann::json(*r.hypothesis_ok) : nlohmann::json();
    out["slack"] = r.slack ? nlohmann::json(*r.slack) : nlohmann::json();
    return out;
}

inline nlohmann::json to_json(const SpectralResult& s, bool include_vector) {
    nlohmann::json out{
        {"rho", s.rho},
        {"bracket", {s.bracket_lo, s.bracket_hi}},
        {"iterations", s.iterations},
        {"residual", s.residual},
        {"converged", s.converged},
    };
    if (include_vector) out["eigenvector"] = s.eigenvector;
    return out;
}

inline nlohmann::json to_json(const CorpusReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json item{
            {"name", c.name},
            {"checked", c.checked},
            {"skipped", c.skipped},
            {"violations", c.violations},
        };
        item["worst_slack"] = std::isfinite(c.worst_slack) ? nlohmann::json(c.worst_slack)
                                                           : nlohmann::json();
        item["first_violation"] =
            c.first_violation ? to_json(*c.first_violation) : nlohmann::json();
        checks.push_back(std::move(item));
    }
    return {{"corpus_size", r.corpus_size}, {"checks", checks}, {"ok", r.ok()}};
}

inline nlohmann::json to_json(const SearchResult& r, const char* objective) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return {{"objective", objective},
            {"optimum", r.optimum},
            {"nodes", r.nodes},
            {"exhaustive", r.exhaustive},
            {"witnesses", witnesses}};
}

}  // namespace spexlin
