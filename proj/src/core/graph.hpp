#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pistr {

using Vertex = std::uint32_t;
using Label = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Normalizes the endpoint order. Does not reject loops.
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices [0, n). Immutable after construction;
/// edges are kept sorted, so edge indices are stable and canonical.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on loops, duplicates, or out-of-range endpoints.
  Graph(Vertex n_vertices, std::vector<Edge> edges);

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Total map from the edges of a graph to labels in [1, strength].
/// `labels()[i]` belongs to `graph().edge(i)`.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  /// Strength defaults to the largest label used (1 for an edgeless graph).
  EdgeLabeling(Graph graph, std::vector<Label> labels);
  EdgeLabeling(Graph graph, std::vector<Label> labels, Label strength);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  Label label(std::size_t edge_index) const { return labels_.at(edge_index); }
  /// Throws InvalidArgument if {a, b} is not an edge.
  Label label(Vertex a, Vertex b) const;
  Label strength() const noexcept { return strength_; }
  Label max_label() const noexcept;

  bool operator==(const EdgeLabeling&) const = default;

 private:
  Graph graph_;
  std::vector<Label> labels_;
  Label strength_ = 1;
};

/// Symmetric non-negative integer matrix with zero diagonal. Entry (i, j) > 0
/// means an edge {i, j} with that label. Indices are 0-based.
class WeightedAdjacencyMatrix {
 public:
  WeightedAdjacencyMatrix() = default;
  explicit WeightedAdjacencyMatrix(std::size_t order) : order_(order), entries_(order * order, 0) {}

  /// Validates squareness, symmetry, zero diagonal and non-negativity.
  static WeightedAdjacencyMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t order() const noexcept { return order_; }
  Label at(std::size_t i, std::size_t j) const { return entries_.at(i * order_ + j); }
  std::span<const Label> row(std::size_t i) const {
    return std::span<const Label>(entries_).subspan(i * order_, order_);
  }
  /// Sets (i, j) and (j, i). Throws InvalidArgument when i == j and value != 0.
  void set_symmetric(std::size_t i, std::size_t j, Label value);

  std::vector<std::vector<std::int64_t>> to_rows() const;

  bool operator==(const WeightedAdjacencyMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<Label> entries_;
};

Graph complete_graph(Vertex n);
/// Vertices of `second` are shifted by `first.vertex_count()`.
Graph disjoint_union(const Graph& first, const Graph& second);
/// Throws InvalidArgument on loops and on edges that already exist.
Graph add_cross_edge(const Graph& g, Vertex u, Vertex v);
/// Subgraph induced by `vertices`, relabeled to [0, k) in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

EdgeLabeling matrix_to_labeled_graph(const WeightedAdjacencyMatrix& m);
WeightedAdjacencyMatrix labeled_graph_to_matrix(const EdgeLabeling& labeling);

bool is_connected(const Graph& g);
/// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
/// True when some vertex has degree 0 or some component is a single edge.
bool has_isolated_vertex_or_edge(const Graph& g);

/// An edge between two different parts of a clique cover, part_a < part_b,
/// u in part_a, v in part_b.
struct CrossEdge {
  std::size_t part_a = 0;
  std::size_t part_b = 0;
  Vertex u = 0;
  Vertex v = 0;

  bool operator==(const CrossEdge&) const = default;
};

/// Partition of the vertex set into cliques. Parts are sorted by size, ties by
/// smallest vertex; each part is sorted. Cross edges follow graph edge order.
struct CliqueCover {
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> sizes;
  std::vector<CrossEdge> cross_edges;
  std::vector<std::size_t> part_of;

  std::size_t part_count() const noexcept { return parts.size(); }
};

/// Builds the canonical cover from an arbitrary partition into cliques.
/// Throws InvalidArgument when `parts` is not a partition into cliques.
CliqueCover make_clique_cover(const Graph& g, std::vector<std::vector<Vertex>> parts);

/// Minimum clique cover, found by exact coloring of the complement, or
/// nullopt when the clique cover number exceeds `k_max`.
std::optional<CliqueCover> clique_cover(const Graph& g, std::size_t k_max);

}  // namespace pistr
