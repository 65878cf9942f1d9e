#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace pistr {

Graph::Graph(Vertex n_vertices, std::vector<Edge> edges) : n_(n_vertices), adjacency_(n_vertices) {
  for (auto& e : edges) {
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    if (e.u >= n_ || e.v >= n_) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            "} out of range for " + std::to_string(n_) + " vertices");
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidArgument("duplicate edge {" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

EdgeLabeling::EdgeLabeling(Graph graph, std::vector<Label> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (labels_.size() != graph_.edge_count()) {
    throw InvalidArgument("labeling has " + std::to_string(labels_.size()) + " labels for " +
                          std::to_string(graph_.edge_count()) + " edges");
  }
  strength_ = std::max<Label>(1, max_label());
  if (std::find(labels_.begin(), labels_.end(), 0u) != labels_.end()) {
    throw InvalidArgument("edge labels must be positive");
  }
}

EdgeLabeling::EdgeLabeling(Graph graph, std::vector<Label> labels, Label strength)
    : EdgeLabeling(std::move(graph), std::move(labels)) {
  if (strength < max_label()) {
    throw InvalidArgument("label " + std::to_string(max_label()) + " exceeds strength " +
                          std::to_string(strength));
  }
  strength_ = strength;
}

Label EdgeLabeling::label(Vertex a, Vertex b) const {
  auto idx = graph_.edge_index(a, b);
  if (!idx) throw InvalidArgument("no edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
  return labels_[*idx];
}

Label EdgeLabeling::max_label() const noexcept {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

WeightedAdjacencyMatrix WeightedAdjacencyMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  WeightedAdjacencyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidArgument("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const auto value = rows[i][j];
      if (value < 0) throw InvalidArgument("negative matrix entry");
      if (value != rows[j].at(i)) throw InvalidArgument("matrix is not symmetric");
      if (i == j && value != 0) throw InvalidArgument("matrix diagonal must be zero");
      if (value > static_cast<std::int64_t>(UINT32_MAX)) throw InvalidArgument("matrix entry too large");
      m.entries_[i * n + j] = static_cast<Label>(value);
    }
  }
  return m;
}

void WeightedAdjacencyMatrix::set_symmetric(std::size_t i, std::size_t j, Label value) {
  if (i >= order_ || j >= order_) throw InvalidArgument("matrix index out of range");
  if (i == j && value != 0) throw InvalidArgument("matrix diagonal must be zero");
  entries_[i * order_ + j] = value;
  entries_[j * order_ + i] = value;
}

std::vector<std::vector<std::int64_t>> WeightedAdjacencyMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> rows(order_);
  for (std::size_t i = 0; i < order_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

Graph complete_graph(Vertex n) {
  if (n == 0) throw InvalidArgument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  const Vertex shift = first.vertex_count();
  std::vector<Edge> edges(first.edges().begin(), first.edges().end());
  for (const auto& e : second.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(shift + second.vertex_count(), std::move(edges));
}

Graph add_cross_edge(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("cannot add a loop");
  if (g.has_edge(u, v)) {
    throw InvalidArgument("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} already present");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(make_edge(u, v));
  return Graph(g.vertex_count(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.vertex_count(), UINT32_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] != UINT32_MAX && index[e.v] != UINT32_MAX) edges.push_back(make_edge(index[e.u], index[e.v]));
  }
  return Graph(static_cast<Vertex>(vertices.size()), std::move(edges));
}

EdgeLabeling matrix_to_labeled_graph(const WeightedAdjacencyMatrix& m) {
  std::vector<Edge> edges;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = i + 1; j < m.order(); ++j) {
      if (m.at(i, j) > 0) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        labels.push_back(m.at(i, j));
      }
    }
  }
  // Row-major upper-triangle traversal is already the sorted edge order.
  return EdgeLabeling(Graph(static_cast<Vertex>(m.order()), std::move(edges)), std::move(labels));
}

WeightedAdjacencyMatrix labeled_graph_to_matrix(const EdgeLabeling& labeling) {
  const auto& g = labeling.graph();
  WeightedAdjacencyMatrix m(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) m.set_symmetric(g.edge(i).u, g.edge(i).v, labeling.label(i));
  return m;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (Vertex w : g.neighbors(component[head])) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool has_isolated_vertex_or_edge(const Graph& g) {
  for (const auto& component : connected_components(g)) {
    if (component.size() <= 2) return true;
  }
  return false;
}

CliqueCover make_clique_cover(const Graph& g, std::vector<std::vector<Vertex>> parts) {
  CliqueCover cover;
  cover.part_of.assign(g.vertex_count(), SIZE_MAX);
  for (auto& part : parts) {
    if (part.empty()) throw InvalidArgument("clique cover part is empty");
    std::sort(part.begin(), part.end());
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t i = 0; i < parts[p].size(); ++i) {
      const Vertex v = parts[p][i];
      if (v >= g.vertex_count()) throw InvalidArgument("clique cover vertex out of range");
      if (cover.part_of[v] != SIZE_MAX) throw InvalidArgument("clique cover parts overlap");
      cover.part_of[v] = p;
      for (std::size_t j = 0; j < i; ++j) {
        if (!g.has_edge(parts[p][j], v)) throw InvalidArgument("clique cover part is not a clique");
      }
    }
  }
  if (std::find(cover.part_of.begin(), cover.part_of.end(), SIZE_MAX) != cover.part_of.end()) {
    throw InvalidArgument("clique cover misses a vertex");
  }
  for (const auto& e : g.edges()) {
    const auto pu = cover.part_of[e.u];
    const auto pv = cover.part_of[e.v];
    if (pu == pv) continue;
    if (pu < pv) cover.cross_edges.push_back({pu, pv, e.u, e.v});
    else cover.cross_edges.push_back({pv, pu, e.v, e.u});
  }
  for (const auto& part : parts) cover.sizes.push_back(part.size());
  cover.parts = std::move(parts);
  return cover;
}

namespace {

// Exact k-coloring of the complement graph by DSatur backtracking. A color
// class of the complement is an independent set there, i.e. a clique in g.
class ComplementColoring {
 public:
  explicit ComplementColoring(const Graph& g) : n_(g.vertex_count()), conflict_(n_, std::vector<bool>(n_, false)) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) conflict_[u][v] = (u != v) && !g.has_edge(u, v);
    complement_degree_.resize(n_);
    for (Vertex u = 0; u < n_; ++u)
      complement_degree_[u] = static_cast<std::size_t>(std::count(conflict_[u].begin(), conflict_[u].end(), true));
  }

  std::optional<std::vector<std::size_t>> color(std::size_t k) {
    k_ = k;
    color_.assign(n_, kUncolored);
    blocked_.assign(static_cast<std::size_t>(n_) * k, 0);
    if (n_ == 0) return color_;
    if (search(0, 0)) return color_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUncolored = SIZE_MAX;

  std::size_t saturation(Vertex v) const {
    std::size_t s = 0;
    for (std::size_t c = 0; c < k_; ++c) s += blocked_[v * k_ + c] > 0 ? 1 : 0;
    return s;
  }

  Vertex pick() const {
    Vertex best = n_;
    std::size_t best_sat = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kUncolored) continue;
      const auto sat = saturation(v);
      if (best == n_ || sat > best_sat ||
          (sat == best_sat && complement_degree_[v] > complement_degree_[best])) {
        best = v;
        best_sat = sat;
      }
    }
    return best;
  }

  void assign(Vertex v, std::size_t c, int delta) {
    for (Vertex w = 0; w < n_; ++w)
      if (conflict_[v][w]) blocked_[w * k_ + c] += delta;
  }

  bool search(std::size_t colored, std::size_t used) {
    if (colored == n_) return true;
    const Vertex v = pick();
    const std::size_t limit = std::min(used + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      if (blocked_[v * k_ + c] > 0) continue;
      color_[v] = c;
      assign(v, c, +1);
      if (search(colored + 1, std::max(used, c + 1))) return true;
      assign(v, c, -1);
      color_[v] = kUncolored;
    }
    return false;
  }

  Vertex n_;
  std::vector<std::vector<bool>> conflict_;
  std::vector<std::size_t> complement_degree_;
  std::size_t k_ = 0;
  std::vector<std::size_t> color_;
  std::vector<int> blocked_;
};

}  // namespace

std::optional<CliqueCover> clique_cover(const Graph& g, std::size_t k_max) {
  if (k_max == 0) throw InvalidArgument("k_max must be at least 1");
  if (g.vertex_count() == 0) return make_clique_cover(g, {});
  ComplementColoring coloring(g);
  for (std::size_t k = 1; k <= std::min<std::size_t>(k_max, g.vertex_count()); ++k) {
    auto colors = coloring.color(k);
    if (!colors) continue;
    std::vector<std::vector<Vertex>> parts(k);
    for (Vertex v = 0; v < g.vertex_count(); ++v) parts[(*colors)[v]].push_back(v);
    std::erase_if(parts, [](const auto& p) { return p.empty(); });
    return make_clique_cover(g, std::move(parts));
  }
  return std::nullopt;
}

}  // namespace pistr
