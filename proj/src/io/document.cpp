#include "document.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "core/errors.hpp"

namespace pistr {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::uint64_t parse_number(std::string_view word, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

GraphDocument parse_graph(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::vector<Label> labels;
  std::vector<std::size_t> edge_lines;
  std::optional<bool> labeled;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;
    last_line = line_no;

    if (words[0] == "p") {
      if (header) throw ParseError(line_no, "second header line");
      if (words.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      const auto n = parse_number(words[1], line_no, "vertex count");
      const auto m = parse_number(words[2], line_no, "edge count");
      if (n > UINT32_MAX) throw ParseError(line_no, "vertex count too large");
      header.emplace(n, m);
      continue;
    }
    if (words[0] != "e") throw ParseError(line_no, "unknown line type '" + std::string(words[0]) + "'");
    if (!header) throw ParseError(line_no, "edge line before header");
    if (words.size() != 3 && words.size() != 4) throw ParseError(line_no, "edge line must be 'e <u> <v> [label]'");

    const bool has_label = words.size() == 4;
    if (labeled && *labeled != has_label) throw ParseError(line_no, "labels must be given on all edges or none");
    labeled = has_label;

    const auto u = parse_number(words[1], line_no, "vertex id");
    const auto v = parse_number(words[2], line_no, "vertex id");
    if (u < 1 || u > header->first || v < 1 || v > header->first) {
      throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(header->first));
    }
    if (u == v) throw ParseError(line_no, "loop edge");
    if (edges.size() == header->second) throw ParseError(line_no, "more edge lines than the header declares");
    edges.push_back(make_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
    edge_lines.push_back(line_no);
    if (has_label) {
      const auto label = parse_number(words[3], line_no, "label");
      if (label < 1 || label > UINT32_MAX) throw ParseError(line_no, "label must be a positive integer");
      labels.push_back(static_cast<Label>(label));
    }
  }

  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'p <n> <m>'");
  if (edges.size() != header->second) {
    throw ParseError(last_line, "header declares " + std::to_string(header->second) + " edges, found " +
                                    std::to_string(edges.size()));
  }

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const auto& e = edges[order[i]];
      throw ParseError(edge_lines[order[i]],
                       "duplicate edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1));
    }
  }

  GraphDocument doc;
  if (labeled.value_or(false)) {
    // Labels follow input order; the graph stores edges sorted.
    std::vector<Label> sorted_labels(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) sorted_labels[i] = labels[order[i]];
    doc.graph = Graph(static_cast<Vertex>(header->first), edges);
    doc.labeling = EdgeLabeling(doc.graph, std::move(sorted_labels));
  } else {
    doc.graph = Graph(static_cast<Vertex>(header->first), std::move(edges));
  }
  return doc;
}

std::string emit_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

std::string emit_graph(const EdgeLabeling& labeling) {
  const auto& g = labeling.graph();
  std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " + std::to_string(labeling.label(i)) +
           "\n";
  }
  return out;
}

}  // namespace pistr
