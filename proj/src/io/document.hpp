#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace pistr {

/// Parsed edge-list document. `labeling` is set when every edge line carries
/// a label.
struct GraphDocument {
  Graph graph;
  std::optional<EdgeLabeling> labeling;
};

/// Format:
///   p <n> <m>
///   e <u> <v> [label]     (m lines, 1-based vertex ids)
/// Blank lines and lines starting with 'c' are ignored. Labels must appear on
/// all edge lines or on none. Throws ParseError carrying the 1-based line.
GraphDocument parse_graph(std::string_view text);

/// Canonical text: header, then edges in sorted order.
std::string emit_graph(const Graph& g);
std::string emit_graph(const EdgeLabeling& labeling);

}  // namespace pistr
