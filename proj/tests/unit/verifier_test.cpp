#include <gtest/gtest.h>

#include <random>

#include "core/constructions.hpp"
#include "core/errors.hpp"
#include "core/verifier.hpp"
#include "support/helpers.hpp"

using namespace pistr;

TEST(ProductDegree, Factorizes) {
  auto d = ProductDegree::of_label(12);
  EXPECT_EQ(d.exponent(2), 2u);
  EXPECT_EQ(d.exponent(3), 1u);
  EXPECT_EQ(d.to_string(), "2^2*3");
  EXPECT_EQ(d.as_pair23(), std::make_pair(2u, 1u));
  EXPECT_FALSE(ProductDegree::of_label(10).as_pair23().has_value());
  EXPECT_TRUE(ProductDegree::of_label(1).is_one());
  EXPECT_EQ(ProductDegree().to_string(), "1");
  EXPECT_THROW(ProductDegree::of_label(0), InvalidArgument);
  EXPECT_EQ(ProductDegree::of_label(6) * ProductDegree::of_label(10), ProductDegree::of_label(60));
  EXPECT_EQ(ProductDegree::from_factors({{3, 1}, {2, 1}, {2, 1}}), ProductDegree::of_label(12));
}

TEST(Verifier, TriangleT) {
  EdgeLabeling t(complete_graph(3), {1, 2, 3});
  auto r = is_product_irregular(t);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.degrees[0].as_pair23(), std::make_pair(1u, 0u));
  EXPECT_EQ(r.degrees[1].as_pair23(), std::make_pair(0u, 1u));
  EXPECT_EQ(r.degrees[2].as_pair23(), std::make_pair(1u, 1u));
}

TEST(Verifier, WitnessIsSmallestPair) {
  // Vertices 0,1 share degree 2; 2..5 all have degree 1.
  Graph g(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}});
  EdgeLabeling l(g, {2, 1, 1, 1});
  auto r = is_product_irregular(l);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, std::make_pair(Vertex{0}, Vertex{1}));
}

TEST(Verifier, IsolatedVertexIsPrecondition) {
  Graph g(3, {{0, 1}});
  EXPECT_THROW(is_product_irregular(EdgeLabeling(g, {1})), PreconditionError);
  EXPECT_THROW(product_degree(EdgeLabeling(g, {1}), 2), PreconditionError);
  EXPECT_THROW(check_matrix(WeightedAdjacencyMatrix(2)), PreconditionError);
}

TEST(Verifier, NamedMatrices) {
  EXPECT_TRUE(check_matrix(named_family(4, Family::A)).ok);
  EXPECT_TRUE(check_matrix(direct_sum(std::vector{named_family(4, Family::A), named_family(9, Family::B)})).ok);
  auto bad = check_matrix(direct_sum(std::vector{named_family(5, Family::B), named_family(5, Family::C)}));
  EXPECT_FALSE(bad.ok);
  EXPECT_TRUE(bad.witness.has_value());
}

TEST(Verifier, AgreesWithOracleOnRandomLabelings) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const Vertex n = 3 + rng() % 8;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (rng() % 2) edges.push_back({i, j});
    Graph g(n, edges);
    bool isolated = false;
    for (Vertex v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
    if (isolated) continue;
    std::vector<Label> labels(g.edge_count());
    for (auto& x : labels) x = 1 + rng() % 7;
    EdgeLabeling l(g, labels);
    EXPECT_EQ(is_product_irregular(l).ok, testing_support::oracle_irregular(l));
  }
}

TEST(Verifier, MatrixAndGraphRoutesAgree) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 9;
    WeightedAdjacencyMatrix m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.set_symmetric(i, i + 1, 1 + rng() % 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j)
        if (rng() % 2) m.set_symmetric(i, j, 1 + rng() % 3);
    const auto a = check_matrix(m);
    const auto b = is_product_irregular(matrix_to_labeled_graph(m));
    EXPECT_EQ(a.ok, b.ok);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.ok, oracle::irregular(m.to_rows()));
  }
}

TEST(Verifier, Pair23MatchesExponents) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    ProductDegree d;
    std::uint32_t a = 0, b = 0;
    for (int k = rng() % 12; k > 0; --k) {
      const Label x = 1 + rng() % 3;
      d *= ProductDegree::of_label(x);
      a += x == 2;
      b += x == 3;
    }
    EXPECT_EQ(d.as_pair23(), std::make_pair(a, b));
  }
}
