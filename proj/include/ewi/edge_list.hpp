#pragma once

#include <filesystem>
#include <iosfwd>

#include "ewi/graph.hpp"

namespace ewi {

// Text format: '#' lines and blank lines are ignored; the first remaining line
// is "n m", followed by exactly m lines "u v" with 0-based vertex ids.
// Malformed input raises ParseError with the offending line number; a
// disconnected graph raises GraphError("graph not connected").
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);

} // namespace ewi
