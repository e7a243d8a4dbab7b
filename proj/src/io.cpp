#include "spexlin/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace spexlin {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw input_error("line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& raw) {
    auto hash = raw.find('#');
    return hash == std::string::npos ? raw : raw.substr(0, hash);
}

}  // namespace

UniformHypergraph parse_hypergraph_text(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;

    long long r = 0, n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;

    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream line(strip_comment(raw));
        if (!have_header) {
            if (!(line >> r >> n >> m)) {
                std::string probe;
                std::istringstream(strip_comment(raw)) >> probe;
                if (probe.empty()) continue;  // blank or comment line before header
                fail(lineno, "expected header 'r n m'");
            }
            std::string extra;
            if (line >> extra) fail(lineno, "trailing token '" + extra + "' after header");
            if (r < 2) fail(lineno, "uniformity must be at least 2");
            if (n < 0) fail(lineno, "vertex count must be nonnegative");
            if (m < 0) fail(lineno, "edge count must be nonnegative");
            have_header = true;
            continue;
        }
        Edge e;
        long long v;
        while (line >> v) {
            if (v < 0 || v >= n) fail(lineno, "vertex id " + std::to_string(v) + " out of range");
            e.push_back(static_cast<Vertex>(v));
        }
        if (e.empty()) continue;
        if (static_cast<long long>(e.size()) != r)
            fail(lineno, "edge has " + std::to_string(e.size()) + " vertices, expected " +
                             std::to_string(r));
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            fail(lineno, "edge repeats a vertex");
        for (const auto& prev : edges)
            if (prev == e) fail(lineno, "duplicate edge");
        edges.push_back(std::move(e));
        if (static_cast<long long>(edges.size()) > m)
            fail(lineno, "more edges than the declared " + std::to_string(m));
    }
    if (!have_header) fail(lineno ? lineno : 1, "missing header 'r n m'");
    if (static_cast<long long>(edges.size()) != m)
        fail(lineno, "declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return {static_cast<int>(r), static_cast<Vertex>(n), std::move(edges)};
}

void write_hypergraph_text(std::ostream& out, const UniformHypergraph& h) {
    out << h.r() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

UniformHypergraph parse_hypergraph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw input_error(std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("r") || !doc.contains("n") || !doc.contains("edges"))
        throw input_error("expected an object with keys r, n, edges");
    if (!doc["r"].is_number_integer() || !doc["n"].is_number_integer() ||
        !doc["edges"].is_array())
        throw input_error("r and n must be integers and edges an array");

    std::vector<Edge> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array()) throw input_error("each edge must be an array of vertex ids");
        Edge e;
        for (const auto& v : item) {
            if (!v.is_number_integer()) throw input_error("vertex ids must be integers");
            e.push_back(v.get<Vertex>());
        }
        edges.push_back(std::move(e));
    }
    return {doc["r"].get<int>(), doc["n"].get<Vertex>(), std::move(edges)};
}

std::string hypergraph_to_json(const UniformHypergraph& h) {
    nlohmann::json doc;
    doc["r"] = h.r();
    doc["n"] = h.vertex_count();
    doc["edges"] = h.edges();
    return doc.dump();
}

UniformHypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_hypergraph_json(text);
    std::istringstream stream(text);
    try {
        return parse_hypergraph_text(stream);
    } catch (const input_error& err) {
        throw input_error(path + ": " + err.what());
    }
}

}  // namespace spexlin
