#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace pistr {

/// The three labelings of the M_n family: A = (1,2,3), B = (2,3,1), C = (3,1,2).
/// Tilde variants use (1,2), (2,3), (3,1) with z = y.
enum class Family { A, B, C };

/// Matrices given entry by entry rather than generated.
enum class FixedMatrix {
  T,
  T5,
  T5_TILDE,
  T6,
  T6_TILDE,
  P6,
  K44_EDGE_8x8,
  M666_BLOCK1,
  M666_BLOCK2,
  M666_BLOCK3,
  T5_TILDE_MOD_456,
  T6_MOD_567,
};

std::span<const FixedMatrix> all_fixed_matrices();
std::string_view fixed_matrix_name(FixedMatrix which);
/// Throws InvalidArgument on an unknown name.
FixedMatrix parse_fixed_matrix_name(std::string_view name);

/// Occurrence counts of x, y and z in one row of M_n(x, y, z), plus the row
/// type: 1 for the pivot row k = ceil(n/2) + 1, 3 for the last row, 2 otherwise.
struct RowProfile {
  int row_type = 2;
  std::size_t x_count = 0;
  std::size_t y_count = 0;
  std::size_t z_count = 0;

  bool operator==(const RowProfile&) const = default;
};

/// Injection pair: which two blocks of a three-block direct sum the cross edge
/// joins (1-based block numbers).
enum class BlockPair { P12, P13, P23 };

/// A label `weight` placed between row `i` of the first block of `pair` and
/// row `j` of the second block. Rows are 1-based.
struct InjectionSpec {
  BlockPair pair = BlockPair::P12;
  std::size_t i = 1;
  std::size_t j = 1;
  Label weight = 1;

  bool operator==(const InjectionSpec&) const = default;
};

/// The pivot row index k = ceil(n/2) + 1 (1-based).
std::size_t pivot_row(std::size_t n);

/// M_n(x, y, z). Throws InvalidArgument when n < 4.
WeightedAdjacencyMatrix m_matrix(std::size_t n, Label x, Label y, Label z);
WeightedAdjacencyMatrix named_family(std::size_t n, Family which);
/// M_n(x, y, y) with (x, y) = (1,2), (2,3), (3,1) for A, B, C.
WeightedAdjacencyMatrix tilde_matrix(std::size_t n, Family which);
WeightedAdjacencyMatrix fixed_matrix(FixedMatrix which);
WeightedAdjacencyMatrix fixed_matrix(std::string_view name);

/// K_2 block, B_n block on rows 3..n+2, and a label 3 between rows 1 and 3.
WeightedAdjacencyMatrix l_matrix(std::size_t n);
/// l_matrix(n) without its second row and column: the K_1 + K_n + edge case.
WeightedAdjacencyMatrix l_prime_matrix(std::size_t n);

WeightedAdjacencyMatrix direct_sum(std::span<const WeightedAdjacencyMatrix> blocks);
/// Removes row and column `index` (0-based).
WeightedAdjacencyMatrix delete_row_column(const WeightedAdjacencyMatrix& m, std::size_t index);

/// Adds each spec's label at the global coordinates given by the block
/// offsets. `block_orders` must have three entries summing to m.order().
/// Throws InvalidArgument if a target entry is already non-zero.
WeightedAdjacencyMatrix apply_injections(const WeightedAdjacencyMatrix& m,
                                         std::span<const std::size_t> block_orders,
                                         std::span<const InjectionSpec> specs);

/// Closed-form counts for row i (1-based) of M_n.
RowProfile row_profile(std::size_t n, std::size_t i);

}  // namespace pistr
