#include <gtest/gtest.h>

#include "core/constructions.hpp"
#include "core/errors.hpp"
#include "core/verifier.hpp"
#include "io/document.hpp"
#include "io/matrix_expr.hpp"
#include "io/report.hpp"
#include "support/helpers.hpp"

using namespace pistr;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Document, LabeledTriangle) {
  auto doc = parse_graph("p 3 3\ne 1 2 1\ne 1 3 2\ne 2 3 3\n");
  ASSERT_TRUE(doc.labeling);
  EXPECT_EQ(*doc.labeling, EdgeLabeling(complete_graph(3), {1, 2, 3}));
  EXPECT_TRUE(is_product_irregular(*doc.labeling).ok);
}

TEST(Document, UnlabeledAndComments) {
  auto doc = parse_graph("c two triangles\n\np 6 7\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n  e 4 5\ne 4 6\ne 5 6\n");
  EXPECT_FALSE(doc.labeling);
  EXPECT_EQ(doc.graph, testing_support::cliques({3, 3}, {{2, 3}}));
}

TEST(Document, EdgelessDocumentIsRejectedDownstream) {
  auto doc = parse_graph("p 2 0\n");
  EXPECT_EQ(doc.graph.vertex_count(), 2u);
  EXPECT_THROW(is_product_irregular(EdgeLabeling(doc.graph, {})), PreconditionError);
}

TEST(Document, LabelsFollowTheirEdgesWhenInputIsUnsorted) {
  auto doc = parse_graph("p 3 3\ne 3 2 3\ne 2 1 1\ne 1 3 2\n");
  ASSERT_TRUE(doc.labeling);
  EXPECT_EQ(doc.labeling->label(1, 2), 3u);
  EXPECT_EQ(doc.labeling->label(0, 1), 1u);
  EXPECT_EQ(emit_graph(*doc.labeling), "p 3 3\ne 1 2 1\ne 1 3 2\ne 2 3 3\n");
}

TEST(Document, RoundTrip) {
  auto g = testing_support::cliques({5, 5});
  const auto text = emit_graph(g);
  EXPECT_EQ(emit_graph(parse_graph(text).graph), text);
  auto labeled = matrix_to_labeled_graph(direct_sum(std::vector{named_family(5, Family::A), named_family(7, Family::B)}));
  const auto ltext = emit_graph(labeled);
  EXPECT_EQ(emit_graph(*parse_graph(ltext).labeling), ltext);
}

TEST(Document, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("e 1 2\n"), 1u);
  EXPECT_EQ(error_line("p 3 2\ne 1 2\nx 2 3\n"), 3u);
  EXPECT_EQ(error_line("p 3 2\ne 1 2\ne 2 1\n"), 3u);
  EXPECT_EQ(error_line("p 3 2\ne 1 2 1\ne 2 3\n"), 3u);
  EXPECT_EQ(error_line("p 3 1\ne 1 4\n"), 2u);
  EXPECT_EQ(error_line("p 3 1\ne 2 2\n"), 2u);
  EXPECT_EQ(error_line("p 3 1\ne 1 2 0\n"), 2u);
  EXPECT_EQ(error_line("p 3 1\ne 1 b\n"), 2u);
  EXPECT_EQ(error_line("p 3 2\ne 1 2\n"), 2u);
  EXPECT_EQ(error_line("p 3 1\ne 1 2\ne 2 3\n"), 3u);
  EXPECT_EQ(error_line("p 3 1\np 3 1\n"), 2u);
}

TEST(MatrixExpression, Blocks) {
  EXPECT_EQ(build_matrix_expression("A4+B9"),
            direct_sum(std::vector{named_family(4, Family::A), named_family(9, Family::B)}));
  EXPECT_EQ(build_matrix_expression("M7:1:2:3"), named_family(7, Family::A));
  EXPECT_EQ(build_matrix_expression(" ~C5 "), tilde_matrix(5, Family::C));
  EXPECT_EQ(build_matrix_expression("L4"), l_matrix(4));
  EXPECT_EQ(build_matrix_expression("Lp6"), l_prime_matrix(6));
  EXPECT_EQ(build_matrix_expression("T5+T5_TILDE"),
            direct_sum(std::vector{fixed_matrix(FixedMatrix::T5), fixed_matrix(FixedMatrix::T5_TILDE)}));
}

TEST(MatrixExpression, Injections) {
  auto m = build_matrix_expression("~A5+~B5+~C5 @ 12:3:3:3, 23:3:3:2");
  EXPECT_EQ(m.at(2, 7), 3u);
  EXPECT_EQ(m.at(7, 12), 2u);
  EXPECT_TRUE(check_matrix(m).ok);
  EXPECT_THROW(build_matrix_expression("A4+B5 @ 12:1:1:1"), InvalidArgument);
  EXPECT_THROW(build_matrix_expression("A4+B5+C5 @ 14:1:1:1"), InvalidArgument);
  EXPECT_THROW(build_matrix_expression("A4+Q5"), InvalidArgument);
  EXPECT_THROW(build_matrix_expression("A3"), InvalidArgument);
  EXPECT_THROW(build_matrix_expression("M5:1:2"), InvalidArgument);
}

TEST(Report, VerifyJson) {
  auto report = check_matrix(direct_sum(std::vector{named_family(5, Family::B), named_family(5, Family::C)}));
  auto j = verify_json(report);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["ok"], false);
  ASSERT_TRUE(j["witness"].is_array());
  EXPECT_EQ(j["witness"][0], report.witness->first + 1);
  EXPECT_EQ(j["degrees"].size(), 10u);
  EXPECT_EQ(j["degrees"][0]["vertex"], 1);
  auto ok = verify_json(check_matrix(named_family(4, Family::A)));
  EXPECT_TRUE(ok["witness"].is_null());
}
