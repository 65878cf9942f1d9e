#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "core/constructions.hpp"
#include "core/errors.hpp"
#include "core/verifier.hpp"
#include "support/oracle.hpp"

using namespace pistr;

namespace {

using Rows = std::vector<std::vector<std::string>>;

// "matrix NAME" / "pattern NAME" headers followed by whitespace-separated rows.
std::map<std::string, Rows> load_golden() {
  std::ifstream in(std::string(PISTR_GOLDEN_DIR) + "/fixed_matrices.txt");
  std::map<std::string, Rows> out;
  std::string line, current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string first;
    ss >> first;
    if (first == "matrix" || first == "pattern") {
      ss >> current;
      continue;
    }
    Rows::value_type row{first};
    for (std::string w; ss >> w;) row.push_back(w);
    out[current].push_back(row);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> as_numbers(const Rows& rows) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const auto& w : r) out.back().push_back(std::stoll(w));
  }
  return out;
}

bool oracle_ok(const WeightedAdjacencyMatrix& m) { return oracle::irregular(m.to_rows()); }

WeightedAdjacencyMatrix sum(std::vector<WeightedAdjacencyMatrix> blocks) { return direct_sum(blocks); }

}  // namespace

TEST(Constructions, FixedMatricesMatchGolden) {
  const auto golden = load_golden();
  for (auto which : all_fixed_matrices()) {
    const std::string name(fixed_matrix_name(which));
    ASSERT_TRUE(golden.count(name)) << name;
    EXPECT_EQ(fixed_matrix(which).to_rows(), as_numbers(golden.at(name))) << name;
    EXPECT_EQ(parse_fixed_matrix_name(name), which);
  }
  EXPECT_THROW(parse_fixed_matrix_name("T7"), InvalidArgument);
}

TEST(Constructions, FixedMatricesAreIrregular) {
  for (auto which : all_fixed_matrices()) {
    EXPECT_TRUE(check_matrix(fixed_matrix(which)).ok) << fixed_matrix_name(which);
    EXPECT_TRUE(oracle_ok(fixed_matrix(which))) << fixed_matrix_name(which);
  }
}

TEST(Constructions, M7MatchesPattern) {
  const auto pattern = load_golden().at("M7");
  for (auto [x, y, z] : {std::tuple{1u, 2u, 3u}, std::tuple{5u, 7u, 11u}}) {
    auto m = m_matrix(7, x, y, z);
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) {
        const auto& cell = pattern[i][j];
        const Label expected = cell == "0" ? 0 : cell == "x" ? x : cell == "y" ? y : z;
        EXPECT_EQ(m.at(i, j), expected) << i << "," << j;
      }
    }
  }
  EXPECT_EQ(pivot_row(7), 5u);
}

TEST(Constructions, MnRejectsSmallOrders) {
  EXPECT_THROW(m_matrix(3, 1, 2, 3), InvalidArgument);
  EXPECT_THROW(m_matrix(5, 0, 2, 3), InvalidArgument);
  EXPECT_THROW(named_family(2, Family::B), InvalidArgument);
}

TEST(Constructions, NamedAndTildeFamilies) {
  EXPECT_EQ(named_family(9, Family::A), m_matrix(9, 1, 2, 3));
  EXPECT_EQ(named_family(9, Family::B), m_matrix(9, 2, 3, 1));
  EXPECT_EQ(named_family(9, Family::C), m_matrix(9, 3, 1, 2));
  EXPECT_EQ(tilde_matrix(6, Family::A), m_matrix(6, 1, 2, 2));
  EXPECT_EQ(tilde_matrix(6, Family::B), m_matrix(6, 2, 3, 3));
  EXPECT_EQ(tilde_matrix(6, Family::C), m_matrix(6, 3, 1, 1));
}

TEST(Constructions, RowProfileCensus) {
  for (std::size_t n = 4; n <= 60; ++n) {
    const auto m = m_matrix(n, 2, 3, 5);
    std::map<int, int> types;
    for (std::size_t i = 1; i <= n; ++i) {
      RowProfile counted{};
      for (std::size_t j = 0; j < n; ++j) {
        const auto v = m.at(i - 1, j);
        counted.x_count += v == 2;
        counted.y_count += v == 3;
        counted.z_count += v == 5;
      }
      const auto p = row_profile(n, i);
      counted.row_type = p.row_type;
      EXPECT_EQ(p, counted) << "n=" << n << " i=" << i;
      EXPECT_EQ(p.x_count + p.y_count + p.z_count, n - 1);
      ++types[p.row_type];
    }
    EXPECT_EQ(types[1], 1);
    EXPECT_EQ(types[3], 1);
    EXPECT_EQ(types[2], static_cast<int>(n) - 2);
  }
  EXPECT_THROW(row_profile(6, 7), InvalidArgument);
}

TEST(Constructions, CoprimeTriplesGiveIrregularMn) {
  for (std::size_t n = 4; n <= 40; ++n) {
    for (auto [x, y, z] : {std::tuple{1u, 2u, 3u}, std::tuple{2u, 3u, 5u}, std::tuple{4u, 9u, 5u}, std::tuple{7u, 11u, 13u}}) {
      EXPECT_TRUE(check_matrix(m_matrix(n, x, y, z)).ok) << n << ":" << x << y << z;
    }
  }
}

TEST(Constructions, DirectSumConcatenatesDegrees) {
  auto a = named_family(5, Family::A);
  auto b = fixed_matrix(FixedMatrix::T6);
  auto s = sum({a, b});
  auto da = row_product_degrees(a);
  auto db = row_product_degrees(b);
  da.insert(da.end(), db.begin(), db.end());
  EXPECT_EQ(row_product_degrees(s), da);
  EXPECT_EQ(s.at(2, 7), 0u);
  EXPECT_THROW(direct_sum(std::span<const WeightedAdjacencyMatrix>{}), InvalidArgument);
}

TEST(Constructions, LMatrices) {
  auto l = l_matrix(4);
  EXPECT_EQ(l.order(), 6u);
  EXPECT_EQ(l.at(0, 1), 1u);
  EXPECT_EQ(l.at(0, 2), 3u);
  EXPECT_EQ(l.at(1, 2), 0u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(l.at(i + 2, j + 2), named_family(4, Family::B).at(i, j));
  auto lp = l_prime_matrix(4);
  EXPECT_EQ(lp.order(), 5u);
  EXPECT_EQ(lp.at(0, 1), 3u);
  for (std::size_t n = 4; n <= 40; ++n) {
    EXPECT_TRUE(check_matrix(l_matrix(n)).ok) << n;
    EXPECT_TRUE(check_matrix(l_prime_matrix(n)).ok) << n;
  }
}

TEST(Constructions, InjectionsTouchExactlyTwoRows) {
  std::vector<std::size_t> orders{4, 5, 5};
  auto base = sum({tilde_matrix(4, Family::A), tilde_matrix(5, Family::B), tilde_matrix(5, Family::C)});
  std::vector<InjectionSpec> specs{{BlockPair::P23, 2, 4, 3}};
  auto m = apply_injections(base, orders, specs);
  EXPECT_EQ(m.at(5, 12), 3u);
  EXPECT_EQ(m.at(12, 5), 3u);
  const auto before = row_product_degrees(base);
  const auto after = row_product_degrees(m);
  for (std::size_t r = 0; r < 14; ++r) {
    if (r == 5 || r == 12) EXPECT_EQ(after[r], before[r] * ProductDegree::of_label(3));
    else EXPECT_EQ(after[r], before[r]);
  }
  std::vector<InjectionSpec> inside{{BlockPair::P12, 5, 1, 2}};
  EXPECT_THROW(apply_injections(base, orders, inside), InvalidArgument);
  std::vector<InjectionSpec> twice{{BlockPair::P12, 1, 1, 2}, {BlockPair::P12, 1, 1, 3}};
  EXPECT_THROW(apply_injections(base, orders, twice), InvalidArgument);
  std::vector<std::size_t> two{9, 5};
  EXPECT_THROW(apply_injections(base, two, specs), InvalidArgument);
}

TEST(Constructions, DeleteRowColumn) {
  auto m = fixed_matrix(FixedMatrix::T);
  auto d = delete_row_column(m, 0);
  EXPECT_EQ(d.order(), 2u);
  EXPECT_EQ(d.at(0, 1), 3u);
  EXPECT_THROW(delete_row_column(m, 3), InvalidArgument);
}

TEST(Constructions, TwoCliqueSumRanges) {
  for (std::size_t n = 4; n <= 25; ++n) {
    for (std::size_t m = n; m <= 25; ++m) {
      const bool excluded = (n == 4 && m == 4) || (n == 5 && m == 5) || (n == 6 && m == 6);
      auto s = sum({named_family(n, Family::A), named_family(m, Family::B)});
      EXPECT_EQ(check_matrix(s).ok, !excluded) << n << "," << m;
      EXPECT_EQ(oracle_ok(s), !excluded);
    }
  }
  for (std::size_t n = 5; n <= 25; ++n) EXPECT_TRUE(oracle_ok(sum({fixed_matrix(FixedMatrix::T), named_family(n, Family::B)})));
}

TEST(Constructions, AnPlusCm) {
  for (std::size_t n = 7; n <= 25; ++n)
    for (std::size_t m = 4; m <= 25; ++m)
      EXPECT_TRUE(oracle_ok(sum({named_family(n, Family::A), named_family(m, Family::C)}))) << n << "," << m;
}
