#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "solver.hpp"

namespace pistr {

/// How the chosen cross edges meet the cover parts.
enum class CrossPattern { none, one_edge, two_edges_same_vertex, two_edges_diff_vertices };
std::string_view cross_pattern_name(CrossPattern pattern);

/// Cross edges that connect the cover parts into a tree, plus the rest.
struct CrossEdgeSelection {
  std::vector<CrossEdge> chosen;
  std::vector<CrossEdge> surplus;
  CrossPattern pattern = CrossPattern::none;
  /// With three parts: the part incident to both chosen edges.
  std::optional<std::size_t> middle_part;
};

/// Two parts: the smallest cross edge. Three parts: the smallest cross edge,
/// then the smallest cross edge reaching the remaining part. Throws
/// PreconditionError when the parts cannot be joined.
CrossEdgeSelection select_cross_edges(const Graph& g, const CliqueCover& cover);

/// Which construction a cover shape dispatches to.
struct DispatchCase {
  std::vector<std::size_t> cover_sizes;  // ascending
  CrossPattern pattern = CrossPattern::none;
  std::string construction_id;
  /// block_of_part[p] is the block hosting cover part p.
  std::vector<std::size_t> block_of_part;
  /// vertex_maps[p][r] is the graph vertex placed at row r of p's block.
  std::vector<std::vector<Vertex>> vertex_maps;
  std::vector<CrossEdge> chosen_edges;
};

enum class ConstructionSource { theorem, search_fallback };
std::string_view construction_source_name(ConstructionSource source);

struct ConstructionOutcome {
  EdgeLabeling labeling;
  Label strength = 0;
  ConstructionSource source = ConstructionSource::theorem;
  DispatchCase case_trace;
  /// Closed-form path only: the block matrix with its injected cross labels, and
  /// the graph vertex sitting at each of its rows.
  std::optional<WeightedAdjacencyMatrix> construction;
  std::vector<Vertex> row_vertex;
  std::uint64_t nodes_explored = 0;
  std::string notes;
};

struct ConstructOptions {
  std::uint64_t seed = 1;
  /// Budget for exact fallback searches.
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Budget of one randomized fallback restart.
  std::uint64_t restart_budget = 10'000'000;
  std::size_t restarts = 16;
  /// Exact exhaustion is used when at most this many edges are undetermined.
  std::size_t exhaustive_edge_limit = 16;
};

/// Construction chosen for a cover shape, before it is aligned to a graph.
struct CasePlan {
  std::string id;
  WeightedAdjacencyMatrix matrix;
  std::vector<std::size_t> block_sizes;
  /// Block that must host the middle part (three-part injection cases).
  std::optional<std::size_t> middle_block;
};

/// Pure dispatch on the sorted part sizes. `middle_size` is the size of the
/// middle part for three-part covers. nullopt means the shape is a fallback.
std::optional<CasePlan> choose_case(std::span<const std::size_t> sorted_sizes, CrossPattern pattern,
                                    std::size_t middle_size = 0);

/// Shapes with no closed-form construction, handled by search. Exactly the
/// complement of choose_case over shapes of at most three parts.
bool is_fallback_shape(std::span<const std::size_t> sorted_sizes);

ConstructionOutcome label_two_cliques(const Graph& g, const CliqueCover& cover, const ConstructOptions& options = {});
ConstructionOutcome label_three_cliques(const Graph& g, const CliqueCover& cover,
                                        const ConstructOptions& options = {});
/// Computes a minimum clique cover (at most 3 parts) and dispatches. Throws
/// PreconditionError for disconnected graphs or isolated vertices/edges,
/// Unsupported when the clique cover number exceeds 3, BudgetExhausted when a
/// fallback search gives up.
ConstructionOutcome construct_labeling(const Graph& g, const ConstructOptions& options = {});

}  // namespace pistr
