#pragma once

#include "spexlin/hypergraph.hpp"

#include <iosfwd>
#include <string>

namespace spexlin {

/// Text format: first line "r n m", then m lines of r space-separated vertex
/// ids. '#' starts a comment. Errors carry 1-based line numbers.
UniformHypergraph parse_hypergraph_text(std::istream& in);
void write_hypergraph_text(std::ostream& out, const UniformHypergraph& h);

/// JSON object form {"r": ..., "n": ..., "edges": [[...], ...]}.
UniformHypergraph parse_hypergraph_json(const std::string& text);
std::string hypergraph_to_json(const UniformHypergraph& h);

/// Reads a file in either format: JSON when the first non-space byte is '{'.
UniformHypergraph load_hypergraph(const std::string& path);

}  // namespace spexlin
