#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graph.hpp"
#include "verifier.hpp"

namespace pistr {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct SearchOptions {
  /// Reject a branch as soon as two completed vertices share a degree.
  /// When false, labelings are only checked at the leaves.
  bool pruning = true;
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Shuffle the label order at every node with this seed.
  std::optional<std::uint64_t> seed;
};

enum class SearchStatus { found, exhausted, budget_exhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<EdgeLabeling> labeling;
  std::uint64_t nodes = 0;
};

/// Depth-first search for a product-irregular labeling with labels in
/// [1, strength]. `pinned` is empty or holds one entry per edge; a non-zero
/// entry fixes that edge's label. Edges are ordered so that vertices are
/// completed one at a time, highest degree first.
SearchOutcome find_labeling(const Graph& g, Label strength, std::span<const Label> pinned = {},
                            const SearchOptions& options = {});

enum class PsStatus {
  exact,             ///< `value` is ps(G) and `certificate` achieves it
  above_limit,       ///< every strength up to s_max was exhausted
  budget_exhausted,  ///< gave up; `value` is the strength being searched
};

struct PsResult {
  PsStatus status = PsStatus::above_limit;
  Label value = 0;
  Label s_max = 0;
  std::optional<EdgeLabeling> certificate;
  std::uint64_t nodes_explored = 0;
};

/// Tries s = 1, 2, ..., s_max in turn. Throws PreconditionError when the graph
/// has isolated vertices or isolated edges.
PsResult ps_exact(const Graph& g, Label s_max, const SearchOptions& options = {});

/// Degree set realized by some labeling of one connected component with all
/// internal degrees distinct, plus one labeling that realizes it.
struct ComponentSignature {
  std::vector<ProductDegree> degrees;  // sorted
  EdgeLabeling representative;
};

/// All distinct internally-irregular degree sets of a connected graph with
/// labels in [1, s]. Throws BudgetExhausted past `node_budget` DFS nodes.
std::vector<ComponentSignature> component_signatures(const Graph& component, Label s,
                                                     std::uint64_t node_budget = kDefaultNodeBudget);

/// ps over a disjoint union, computed by choosing one signature per component
/// with pairwise disjoint degree sets. Agrees with ps_exact.
PsResult ps_exact_disconnected(const Graph& g, Label s_max, std::uint64_t node_budget = kDefaultNodeBudget);

struct K4Characterization {
  bool holds = false;            // both directions
  bool necessary_holds = false;  // irregular implies a vertex of degree 2*3
  std::size_t labelings = 0;
  std::size_t irregular = 0;
  std::size_t with_six_not_irregular = 0;
};

/// Checks over all 3^6 labelings of K_4 with labels {1,2,3} that a labeling is
/// product-irregular exactly when some vertex has degree 2*3. Each direction is
/// tallied separately.
K4Characterization verify_k4_characterization();

}  // namespace pistr
