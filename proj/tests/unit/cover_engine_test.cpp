#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "core/cover_engine.hpp"
#include "core/errors.hpp"
#include "io/document.hpp"
#include "support/helpers.hpp"

using namespace pistr;
using testing_support::cliques;
using testing_support::oracle_irregular;
using testing_support::planted_cover;

namespace {

void expect_valid_trace(const ConstructionOutcome& out, const Graph& g) {
  const auto& t = out.case_trace;
  std::set<Vertex> seen;
  for (const auto& map : t.vertex_maps)
    for (Vertex v : map) EXPECT_TRUE(seen.insert(v).second);
  if (out.source == ConstructionSource::theorem) {
    EXPECT_EQ(seen.size(), g.vertex_count());
    ASSERT_TRUE(out.construction);
    EXPECT_EQ(out.row_vertex.size(), g.vertex_count());
    // Each clique edge carries the matrix entry of its rows.
    std::vector<std::size_t> row_of(g.vertex_count());
    for (std::size_t r = 0; r < out.row_vertex.size(); ++r) row_of[out.row_vertex[r]] = r;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edge(i);
      const auto entry = out.construction->at(row_of[e.u], row_of[e.v]);
      EXPECT_EQ(out.labeling.label(i), entry == 0 ? 1u : entry);
    }
  }
}

}  // namespace

TEST(CrossEdges, Patterns) {
  auto g2 = cliques({4, 5}, {{1, 6}, {0, 4}});
  auto c2 = make_clique_cover(g2, {{0, 1, 2, 3}, {4, 5, 6, 7, 8}});
  auto s2 = select_cross_edges(g2, c2);
  EXPECT_EQ(s2.pattern, CrossPattern::one_edge);
  ASSERT_EQ(s2.chosen.size(), 1u);
  EXPECT_EQ(s2.chosen[0].u, 0u);
  EXPECT_EQ(s2.chosen[0].v, 4u);
  EXPECT_EQ(s2.surplus.size(), 1u);

  auto same = cliques({4, 4, 5}, {{3, 4}, {3, 8}});
  auto cs = make_clique_cover(same, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11, 12}});
  auto ss = select_cross_edges(same, cs);
  EXPECT_EQ(ss.pattern, CrossPattern::two_edges_same_vertex);
  EXPECT_EQ(*ss.middle_part, 0u);

  auto diff = cliques({4, 4, 5}, {{3, 4}, {5, 8}});
  auto cd = make_clique_cover(diff, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11, 12}});
  auto sd = select_cross_edges(diff, cd);
  EXPECT_EQ(sd.pattern, CrossPattern::two_edges_diff_vertices);
  EXPECT_EQ(*sd.middle_part, 1u);

  auto apart = cliques({4, 4});
  EXPECT_THROW(select_cross_edges(apart, make_clique_cover(apart, {{0, 1, 2, 3}, {4, 5, 6, 7}})), PreconditionError);
}

TEST(Dispatch, TotalOverSmallShapes) {
  const std::vector<CrossPattern> three_patterns{CrossPattern::two_edges_same_vertex,
                                                 CrossPattern::two_edges_diff_vertices};
  for (std::size_t a = 1; a <= 30; ++a) {
    std::vector<std::size_t> one{a};
    EXPECT_NE(is_fallback_shape(one), choose_case(one, CrossPattern::none).has_value()) << a;
    for (std::size_t b = a; b <= 30; ++b) {
      std::vector<std::size_t> two{a, b};
      auto plan = choose_case(two, CrossPattern::one_edge);
      EXPECT_NE(is_fallback_shape(two), plan.has_value()) << a << "," << b;
      if (plan) EXPECT_TRUE(oracle::irregular(plan->matrix.to_rows())) << plan->id;
    }
  }
  for (std::size_t a = 1; a <= 14; ++a) {
    for (std::size_t b = a; b <= 14; ++b) {
      for (std::size_t c = b; c <= 14; ++c) {
        std::vector<std::size_t> three{a, b, c};
        for (auto pattern : three_patterns) {
          for (auto middle : std::set<std::size_t>{a, b, c}) {
            auto plan = choose_case(three, pattern, middle);
            EXPECT_NE(is_fallback_shape(three), plan.has_value()) << a << "," << b << "," << c;
            if (!plan) continue;
            EXPECT_TRUE(oracle::irregular(plan->matrix.to_rows())) << plan->id;
            std::multiset<std::size_t> got(plan->block_sizes.begin(), plan->block_sizes.end());
            EXPECT_EQ(got, (std::multiset<std::size_t>{a, b, c})) << plan->id;
            if (plan->middle_block) EXPECT_EQ(plan->block_sizes[*plan->middle_block], middle) << plan->id;
          }
        }
      }
    }
  }
}

TEST(Dispatch, FallbackShapeList) {
  for (auto s : std::vector<std::vector<std::size_t>>{{3, 3}, {3, 4}, {2, 3}, {1, 2}, {4, 4, 6}, {4, 4, 9}, {4, 6, 6}, {3, 5, 7}}) {
    EXPECT_TRUE(is_fallback_shape(s));
  }
  for (auto s : std::vector<std::vector<std::size_t>>{{3, 5}, {2, 4}, {1, 4}, {4, 4}, {4, 4, 4}, {4, 4, 5}, {4, 5, 6}, {4, 6, 7}, {6, 6, 6}}) {
    EXPECT_FALSE(is_fallback_shape(s));
  }
}

TEST(Construct, ClosedFormShapesOnPlantedGraphs) {
  std::mt19937_64 rng(99);
  const std::vector<std::vector<std::size_t>> shapes{
      {3},          {7},          {1, 4},       {2, 4},       {1, 9},       {2, 11},      {3, 5},
      {3, 12},      {4, 4},       {5, 5},       {6, 6},       {4, 5},       {4, 9},       {6, 7},
      {4, 4, 4},    {4, 4, 5},    {4, 5, 5},    {5, 5, 5},    {4, 5, 6},    {4, 5, 7},    {4, 5, 12},
      {4, 6, 7},    {4, 6, 8},    {4, 6, 13},   {5, 5, 6},    {5, 5, 7},    {5, 6, 6},    {5, 6, 7},
      {5, 6, 11},   {6, 6, 6},    {6, 6, 7},    {6, 6, 8},    {4, 7, 7},    {5, 8, 9},    {6, 9, 7},
      {7, 7, 7},    {7, 8, 12},   {9, 8, 7},    {5, 6, 8}};
  for (const auto& shape : shapes) {
    for (int rep = 0; rep < 6; ++rep) {
      auto planted = planted_cover(shape, rep % 3, rng);
      auto out = construct_labeling(planted.graph);
      auto sorted = shape;
      std::sort(sorted.begin(), sorted.end());
      if (out.case_trace.cover_sizes != sorted) continue;  // extra edges changed the cover
      EXPECT_EQ(out.source, ConstructionSource::theorem) << out.case_trace.construction_id;
      EXPECT_EQ(out.strength, 3u);
      EXPECT_LE(out.labeling.max_label(), 3u);
      EXPECT_TRUE(oracle_irregular(out.labeling)) << out.case_trace.construction_id;
      expect_valid_trace(out, planted.graph);
    }
  }
}

TEST(Construct, EveryInjectionCaseAndPattern) {
  // Parts: sizes in order given; the two chosen edges either share the middle
  // vertex or not.
  struct Case {
    std::vector<std::size_t> sizes;
    std::size_t middle;
  };
  const std::vector<Case> cases{{{4, 4, 4}, 1}, {{4, 4, 5}, 0}, {{4, 5, 4}, 1},
                                {{4, 5, 5}, 0}, {{4, 5, 5}, 1}, {{5, 5, 5}, 1}};
  std::set<std::string> ids;
  for (const auto& c : cases) {
    std::vector<std::size_t> offset{0, c.sizes[0], c.sizes[0] + c.sizes[1]};
    std::vector<std::size_t> outer;
    for (std::size_t p = 0; p < 3; ++p)
      if (p != c.middle) outer.push_back(p);
    for (bool same : {true, false}) {
      const auto m0 = static_cast<Vertex>(offset[c.middle]);
      const auto m1 = static_cast<Vertex>(offset[c.middle] + (same ? 0 : 1));
      auto g = cliques(c.sizes, {{m0, static_cast<Vertex>(offset[outer[0]] + 1)},
                                 {m1, static_cast<Vertex>(offset[outer[1]] + 2)}});
      auto out = construct_labeling(g);
      EXPECT_EQ(out.source, ConstructionSource::theorem);
      EXPECT_EQ(out.case_trace.pattern,
                same ? CrossPattern::two_edges_same_vertex : CrossPattern::two_edges_diff_vertices);
      EXPECT_TRUE(oracle_irregular(out.labeling)) << out.case_trace.construction_id;
      expect_valid_trace(out, g);
      ids.insert(out.case_trace.construction_id);
    }
  }
  EXPECT_EQ(ids.size(), 12u);
}

TEST(Construct, TwoTrianglesFallBackToSearch) {
  auto g = cliques({3, 3}, {{2, 3}});
  auto out = construct_labeling(g);
  EXPECT_EQ(out.source, ConstructionSource::search_fallback);
  EXPECT_EQ(out.strength, 3u);
  EXPECT_TRUE(oracle_irregular(out.labeling));
}

TEST(Construct, K3K4Golden) {
  auto g = cliques({3, 4}, {{2, 3}});
  auto out = construct_labeling(g);
  EXPECT_EQ(out.source, ConstructionSource::search_fallback);
  std::ifstream in(std::string(PISTR_GOLDEN_DIR) + "/k3_k4_edge.txt");
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(emit_graph(out.labeling), golden.str());
  EXPECT_TRUE(oracle_irregular(out.labeling));
}

TEST(Construct, FallbackIsDeterministicUnderSeed) {
  std::mt19937_64 rng(7);
  auto planted = planted_cover({4, 4, 7}, 1, rng);
  ConstructOptions options;
  options.seed = 5;
  auto a = construct_labeling(planted.graph, options);
  auto b = construct_labeling(planted.graph, options);
  EXPECT_EQ(a.source, ConstructionSource::search_fallback);
  EXPECT_EQ(a.labeling, b.labeling);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
  EXPECT_TRUE(oracle_irregular(a.labeling));
}

TEST(Construct, Errors) {
  EXPECT_THROW(construct_labeling(cliques({4, 4})), PreconditionError);
  EXPECT_THROW(construct_labeling(Graph(2, {{0, 1}})), PreconditionError);
  Graph path(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  EXPECT_THROW(construct_labeling(path), Unsupported);
  auto g = cliques({4, 5}, {{0, 4}});
  auto cover = make_clique_cover(g, {{0, 1, 2, 3}, {4, 5, 6, 7, 8}});
  EXPECT_THROW(label_three_cliques(g, cover), InvalidArgument);
  EXPECT_TRUE(oracle_irregular(label_two_cliques(g, cover).labeling));
}
