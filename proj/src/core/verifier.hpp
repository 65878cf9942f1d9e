#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace pistr {

/// Exact product of edge labels, kept as a prime factorization so it never
/// overflows. The default value is the empty product, 1.
class ProductDegree {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (prime, exponent)

  ProductDegree() = default;
  static ProductDegree of_label(Label label);
  /// Factors with positive exponents; primes need not be sorted or unique.
  static ProductDegree from_factors(std::vector<Factor> factors);

  ProductDegree& operator*=(const ProductDegree& other);
  friend ProductDegree operator*(ProductDegree a, const ProductDegree& b) { return a *= b; }

  /// Sorted by prime, every exponent positive.
  std::span<const Factor> factors() const noexcept { return factors_; }
  std::uint32_t exponent(std::uint32_t prime) const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }
  /// (exponent of 2, exponent of 3) when no other prime occurs.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> as_pair23() const;
  /// "1", "2^3*3", "2*5^2", ...
  std::string to_string() const;

  auto operator<=>(const ProductDegree&) const = default;

 private:
  std::vector<Factor> factors_;
};

struct ProductDegreeHash {
  std::size_t operator()(const ProductDegree& d) const noexcept;
};

struct IrregularityReport {
  bool ok = false;
  /// Lexicographically smallest pair u < v with equal product degree.
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::vector<ProductDegree> degrees;
};

/// Throws PreconditionError when v is isolated.
ProductDegree product_degree(const EdgeLabeling& labeling, Vertex v);

/// Throws PreconditionError when the graph has an isolated vertex.
IrregularityReport is_product_irregular(const EdgeLabeling& labeling);

/// Product of the non-zero entries of every row; an all-zero row yields 1.
std::vector<ProductDegree> row_product_degrees(const WeightedAdjacencyMatrix& m);

/// Verdict computed straight from the matrix rows. Throws PreconditionError on
/// an all-zero row (isolated vertex).
IrregularityReport check_matrix(const WeightedAdjacencyMatrix& m);

/// Shared by both routes: pairwise distinctness plus smallest witness.
IrregularityReport make_report(std::vector<ProductDegree> degrees);

}  // namespace pistr
