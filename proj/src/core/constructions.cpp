#include "constructions.hpp"

#include <array>
#include <numeric>

#include "errors.hpp"

namespace pistr {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

struct FixedEntry {
  FixedMatrix id;
  std::string_view name;
  Rows rows;
};

const std::vector<FixedEntry>& fixed_table() {
  static const std::vector<FixedEntry> table = {
      {FixedMatrix::T, "T", {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}},
      {FixedMatrix::T5,
       "T5",
       {{0, 3, 1, 1, 1}, {3, 0, 1, 3, 2}, {1, 1, 0, 1, 1}, {1, 3, 1, 0, 2}, {1, 2, 1, 2, 0}}},
      {FixedMatrix::T5_TILDE,
       "T5_TILDE",
       {{0, 2, 2, 2, 1}, {2, 0, 3, 3, 3}, {2, 3, 0, 2, 3}, {2, 3, 2, 0, 1}, {1, 3, 3, 1, 0}}},
      {FixedMatrix::T6,
       "T6",
       {{0, 1, 2, 3, 1, 3},
        {1, 0, 1, 3, 1, 1},
        {2, 1, 0, 1, 2, 2},
        {3, 3, 1, 0, 1, 1},
        {1, 1, 2, 1, 0, 1},
        {3, 1, 2, 1, 1, 0}}},
      {FixedMatrix::T6_TILDE,
       "T6_TILDE",
       {{0, 2, 3, 3, 3, 3},
        {2, 0, 2, 3, 3, 2},
        {3, 2, 0, 2, 1, 2},
        {3, 3, 2, 0, 3, 1},
        {3, 3, 1, 3, 0, 3},
        {3, 2, 2, 1, 3, 0}}},
      {FixedMatrix::P6,
       "P6",
       {{0, 2, 2, 2, 2, 1},
        {2, 0, 2, 2, 2, 3},
        {2, 2, 0, 2, 3, 3},
        {2, 2, 2, 0, 3, 1},
        {2, 2, 3, 3, 0, 3},
        {1, 3, 3, 1, 3, 0}}},
      {FixedMatrix::K44_EDGE_8x8,
       "K44_EDGE_8x8",
       {{0, 1, 1, 1, 0, 0, 0, 0},
        {1, 0, 1, 2, 0, 0, 0, 0},
        {1, 1, 0, 3, 0, 0, 0, 0},
        {1, 2, 3, 0, 3, 0, 0, 0},
        {0, 0, 0, 3, 0, 2, 2, 2},
        {0, 0, 0, 0, 2, 0, 2, 3},
        {0, 0, 0, 0, 2, 2, 0, 1},
        {0, 0, 0, 0, 2, 3, 1, 0}}},
      {FixedMatrix::M666_BLOCK1,
       "M666_BLOCK1",
       {{0, 1, 1, 1, 1, 1},
        {1, 0, 3, 1, 1, 2},
        {1, 3, 0, 1, 2, 2},
        {1, 1, 1, 0, 2, 2},
        {1, 1, 2, 2, 0, 2},
        {1, 2, 2, 2, 2, 0}}},
      {FixedMatrix::M666_BLOCK2,
       "M666_BLOCK2",
       {{0, 2, 2, 2, 2, 2},
        {2, 0, 1, 2, 2, 3},
        {2, 1, 0, 2, 3, 3},
        {2, 2, 2, 0, 3, 3},
        {2, 2, 3, 3, 0, 3},
        {2, 3, 3, 3, 3, 0}}},
      {FixedMatrix::M666_BLOCK3,
       "M666_BLOCK3",
       {{0, 3, 3, 3, 3, 3},
        {3, 0, 2, 3, 3, 1},
        {3, 2, 0, 3, 1, 1},
        {3, 3, 3, 0, 1, 1},
        {3, 3, 1, 1, 0, 1},
        {3, 1, 1, 1, 1, 0}}},
      {FixedMatrix::T5_TILDE_MOD_456,
       "T5_TILDE_MOD_456",
       {{0, 2, 2, 2, 1}, {2, 0, 3, 1, 3}, {2, 3, 0, 2, 3}, {2, 1, 2, 0, 1}, {1, 3, 3, 1, 0}}},
      {FixedMatrix::T6_MOD_567,
       "T6_MOD_567",
       {{0, 2, 2, 2, 1, 1},
        {2, 0, 3, 3, 3, 1},
        {2, 3, 0, 2, 3, 1},
        {2, 3, 2, 0, 1, 2},
        {1, 3, 3, 1, 0, 1},
        {1, 1, 1, 2, 1, 0}}},
  };
  return table;
}

const FixedEntry& fixed_entry(FixedMatrix which) {
  for (const auto& entry : fixed_table())
    if (entry.id == which) return entry;
  throw InvalidArgument("unknown fixed matrix");
}

void require_order(std::size_t n, const char* what) {
  if (n < 4) throw InvalidArgument(std::string(what) + " needs order at least 4, got " + std::to_string(n));
}

std::size_t block_offset(std::span<const std::size_t> orders, std::size_t block) {
  return std::accumulate(orders.begin(), orders.begin() + static_cast<std::ptrdiff_t>(block), std::size_t{0});
}

}  // namespace

std::span<const FixedMatrix> all_fixed_matrices() {
  static const std::array<FixedMatrix, 12> all = {
      FixedMatrix::T,           FixedMatrix::T5,          FixedMatrix::T5_TILDE,    FixedMatrix::T6,
      FixedMatrix::T6_TILDE,    FixedMatrix::P6,          FixedMatrix::K44_EDGE_8x8, FixedMatrix::M666_BLOCK1,
      FixedMatrix::M666_BLOCK2, FixedMatrix::M666_BLOCK3, FixedMatrix::T5_TILDE_MOD_456, FixedMatrix::T6_MOD_567,
  };
  return all;
}

std::string_view fixed_matrix_name(FixedMatrix which) { return fixed_entry(which).name; }

FixedMatrix parse_fixed_matrix_name(std::string_view name) {
  for (const auto& entry : fixed_table())
    if (entry.name == name) return entry.id;
  throw InvalidArgument("unknown fixed matrix '" + std::string(name) + "'");
}

std::size_t pivot_row(std::size_t n) { return (n + 1) / 2 + 1; }

WeightedAdjacencyMatrix m_matrix(std::size_t n, Label x, Label y, Label z) {
  require_order(n, "M_n");
  if (x == 0 || y == 0 || z == 0) throw InvalidArgument("M_n labels must be positive");
  const std::size_t k = pivot_row(n);
  WeightedAdjacencyMatrix m(n);
  // i, j are 1-based here so the case split reads like the definition.
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      Label value = y;
      if (j <= n - i + 1) value = x;
      else if ((i == k && j == n) || (i == n && j == k)) value = z;
      m.set_symmetric(i - 1, j - 1, value);
    }
  }
  return m;
}

WeightedAdjacencyMatrix named_family(std::size_t n, Family which) {
  switch (which) {
    case Family::A: return m_matrix(n, 1, 2, 3);
    case Family::B: return m_matrix(n, 2, 3, 1);
    case Family::C: return m_matrix(n, 3, 1, 2);
  }
  throw InvalidArgument("unknown family");
}

WeightedAdjacencyMatrix tilde_matrix(std::size_t n, Family which) {
  switch (which) {
    case Family::A: return m_matrix(n, 1, 2, 2);
    case Family::B: return m_matrix(n, 2, 3, 3);
    case Family::C: return m_matrix(n, 3, 1, 1);
  }
  throw InvalidArgument("unknown family");
}

WeightedAdjacencyMatrix fixed_matrix(FixedMatrix which) {
  return WeightedAdjacencyMatrix::from_rows(fixed_entry(which).rows);
}

WeightedAdjacencyMatrix fixed_matrix(std::string_view name) { return fixed_matrix(parse_fixed_matrix_name(name)); }

WeightedAdjacencyMatrix l_matrix(std::size_t n) {
  require_order(n, "L");
  const auto b = named_family(n, Family::B);
  WeightedAdjacencyMatrix m(n + 2);
  m.set_symmetric(0, 1, 1);
  m.set_symmetric(0, 2, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set_symmetric(i + 2, j + 2, b.at(i, j));
  return m;
}

WeightedAdjacencyMatrix l_prime_matrix(std::size_t n) { return delete_row_column(l_matrix(n), 1); }

WeightedAdjacencyMatrix direct_sum(std::span<const WeightedAdjacencyMatrix> blocks) {
  if (blocks.empty()) throw InvalidArgument("direct sum of no matrices");
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.order();
  WeightedAdjacencyMatrix m(total);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.order(); ++i)
      for (std::size_t j = i + 1; j < b.order(); ++j) m.set_symmetric(offset + i, offset + j, b.at(i, j));
    offset += b.order();
  }
  return m;
}

WeightedAdjacencyMatrix delete_row_column(const WeightedAdjacencyMatrix& m, std::size_t index) {
  if (index >= m.order()) throw InvalidArgument("row index out of range");
  WeightedAdjacencyMatrix out(m.order() - 1);
  auto map = [index](std::size_t i) { return i < index ? i : i - 1; };
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (i == index) continue;
    for (std::size_t j = i + 1; j < m.order(); ++j) {
      if (j == index) continue;
      out.set_symmetric(map(i), map(j), m.at(i, j));
    }
  }
  return out;
}

WeightedAdjacencyMatrix apply_injections(const WeightedAdjacencyMatrix& m,
                                         std::span<const std::size_t> block_orders,
                                         std::span<const InjectionSpec> specs) {
  if (block_orders.size() != 3) throw InvalidArgument("injections need exactly three block orders");
  if (block_orders[0] + block_orders[1] + block_orders[2] != m.order()) {
    throw InvalidArgument("block orders do not add up to the matrix order");
  }
  WeightedAdjacencyMatrix out = m;
  for (const auto& spec : specs) {
    std::size_t first = 0;
    std::size_t second = 1;
    switch (spec.pair) {
      case BlockPair::P12: first = 0, second = 1; break;
      case BlockPair::P13: first = 0, second = 2; break;
      case BlockPair::P23: first = 1, second = 2; break;
    }
    if (spec.weight == 0) throw InvalidArgument("injection weight must be positive");
    if (spec.i < 1 || spec.i > block_orders[first] || spec.j < 1 || spec.j > block_orders[second]) {
      throw InvalidArgument("injection row out of block range");
    }
    const std::size_t r = block_offset(block_orders, first) + spec.i - 1;
    const std::size_t c = block_offset(block_orders, second) + spec.j - 1;
    if (out.at(r, c) != 0) {
      throw InvalidArgument("injection target (" + std::to_string(r + 1) + ", " + std::to_string(c + 1) +
                            ") already holds a label");
    }
    out.set_symmetric(r, c, spec.weight);
  }
  return out;
}

RowProfile row_profile(std::size_t n, std::size_t i) {
  require_order(n, "row profile");
  if (i < 1 || i > n) throw InvalidArgument("row index out of range");
  const std::size_t k = pivot_row(n);
  if (i == n) return {3, 1, n - 3, 1};
  if (i == k) return {1, n / 2, (n + 1) / 2 - 2, 1};  // ceil((n-1)/2) == n/2
  if (i < k) return {2, n - i, i - 1, 0};
  return {2, n - i + 1, i - 2, 0};
}

}  // namespace pistr
