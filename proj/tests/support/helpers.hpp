#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "core/graph.hpp"
#include "oracle.hpp"

namespace testing_support {

inline std::vector<oracle::LabeledEdge> oracle_edges(const pistr::EdgeLabeling& l) {
  std::vector<oracle::LabeledEdge> out;
  for (std::size_t i = 0; i < l.graph().edge_count(); ++i)
    out.push_back({l.graph().edge(i).u, l.graph().edge(i).v, l.label(i)});
  return out;
}

inline bool oracle_irregular(const pistr::EdgeLabeling& l) {
  return oracle::irregular(l.graph().vertex_count(), oracle_edges(l));
}

/// Disjoint union of cliques of the given sizes on vertices 0..n-1 in order.
inline pistr::Graph cliques(const std::vector<std::size_t>& sizes, const std::vector<pistr::Edge>& extra = {}) {
  std::vector<pistr::Edge> edges;
  pistr::Vertex offset = 0;
  for (auto s : sizes) {
    for (pistr::Vertex i = 0; i < s; ++i)
      for (pistr::Vertex j = i + 1; j < s; ++j) edges.push_back({offset + i, offset + j});
    offset += static_cast<pistr::Vertex>(s);
  }
  for (auto e : extra) edges.push_back(pistr::make_edge(e.u, e.v));
  return pistr::Graph(offset, edges);
}

struct Planted {
  pistr::Graph graph;
  std::vector<std::vector<pistr::Vertex>> parts;
};

/// Random connected graph whose vertex set is covered by cliques of the given
/// sizes: cliques on shuffled vertex ids, a spanning chain of cross edges,
/// plus up to `extra` more random cross edges.
inline Planted planted_cover(const std::vector<std::size_t>& sizes, std::size_t extra, std::mt19937_64& rng) {
  const auto n = static_cast<pistr::Vertex>(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}));
  std::vector<pistr::Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);

  Planted out;
  std::size_t pos = 0;
  for (auto s : sizes) {
    out.parts.emplace_back(ids.begin() + static_cast<std::ptrdiff_t>(pos),
                           ids.begin() + static_cast<std::ptrdiff_t>(pos + s));
    pos += s;
  }
  std::vector<pistr::Edge> edges;
  for (const auto& p : out.parts)
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) edges.push_back(pistr::make_edge(p[i], p[j]));

  auto pick = [&](const std::vector<pistr::Vertex>& p) {
    return p[std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(rng)];
  };
  for (std::size_t k = 1; k < out.parts.size(); ++k) edges.push_back(pistr::make_edge(pick(out.parts[k - 1]), pick(out.parts[k])));
  for (std::size_t t = 0; t < extra && out.parts.size() > 1; ++t) {
    const auto a = std::uniform_int_distribution<std::size_t>(0, out.parts.size() - 1)(rng);
    auto b = std::uniform_int_distribution<std::size_t>(0, out.parts.size() - 2)(rng);
    if (b >= a) ++b;
    edges.push_back(pistr::make_edge(pick(out.parts[a]), pick(out.parts[b])));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = pistr::Graph(n, edges);
  return out;
}

}  // namespace testing_support
