#include "cover_engine.hpp"

#include <algorithm>
#include <map>

#include "constructions.hpp"
#include "errors.hpp"
#include "verifier.hpp"

namespace pistr {

std::string_view cross_pattern_name(CrossPattern pattern) {
  switch (pattern) {
    case CrossPattern::none: return "none";
    case CrossPattern::one_edge: return "one_edge";
    case CrossPattern::two_edges_same_vertex: return "two_edges_same_vertex";
    case CrossPattern::two_edges_diff_vertices: return "two_edges_diff_vertices";
  }
  return "unknown";
}

std::string_view construction_source_name(ConstructionSource source) {
  return source == ConstructionSource::theorem ? "theorem" : "search-fallback";
}

CrossEdgeSelection select_cross_edges(const Graph& g, const CliqueCover& cover) {
  (void)g;
  CrossEdgeSelection out;
  const auto parts = cover.part_count();
  if (parts <= 1) {
    out.pattern = CrossPattern::none;
    return out;
  }
  if (parts > 3) throw InvalidArgument("cross-edge selection handles at most three parts");
  if (cover.cross_edges.empty()) throw PreconditionError("cover parts are not connected");

  std::vector<bool> taken(cover.cross_edges.size(), false);
  out.chosen.push_back(cover.cross_edges.front());
  taken[0] = true;
  if (parts == 3) {
    const auto& first = out.chosen.front();
    std::size_t third = 0;
    while (third == first.part_a || third == first.part_b) ++third;
    for (std::size_t i = 0; i < cover.cross_edges.size(); ++i) {
      const auto& e = cover.cross_edges[i];
      if (e.part_a == third || e.part_b == third) {
        out.chosen.push_back(e);
        taken[i] = true;
        break;
      }
    }
    if (out.chosen.size() != 2) throw PreconditionError("cover parts are not connected");
  }
  for (std::size_t i = 0; i < cover.cross_edges.size(); ++i)
    if (!taken[i]) out.surplus.push_back(cover.cross_edges[i]);

  if (parts == 2) {
    out.pattern = CrossPattern::one_edge;
    return out;
  }
  const auto& e1 = out.chosen[0];
  const auto& e2 = out.chosen[1];
  const std::size_t middle = (e1.part_a == e2.part_a || e1.part_a == e2.part_b) ? e1.part_a : e1.part_b;
  const Vertex m1 = e1.part_a == middle ? e1.u : e1.v;
  const Vertex m2 = e2.part_a == middle ? e2.u : e2.v;
  out.middle_part = middle;
  out.pattern = m1 == m2 ? CrossPattern::two_edges_same_vertex : CrossPattern::two_edges_diff_vertices;
  return out;
}

namespace {

WeightedAdjacencyMatrix sum(std::initializer_list<WeightedAdjacencyMatrix> blocks) {
  std::vector<WeightedAdjacencyMatrix> list(blocks);
  return direct_sum(list);
}

WeightedAdjacencyMatrix A(std::size_t n) { return named_family(n, Family::A); }
WeightedAdjacencyMatrix B(std::size_t n) { return named_family(n, Family::B); }
WeightedAdjacencyMatrix C(std::size_t n) { return named_family(n, Family::C); }
WeightedAdjacencyMatrix F(FixedMatrix which) { return fixed_matrix(which); }

CasePlan plan(std::string id, WeightedAdjacencyMatrix m, std::vector<std::size_t> sizes,
              std::optional<std::size_t> middle = std::nullopt) {
  return CasePlan{std::move(id), std::move(m), std::move(sizes), middle};
}

// Sum of three tilde blocks with two injected cross labels.
CasePlan injected(std::string id, std::array<std::pair<Family, std::size_t>, 3> blocks, std::size_t middle,
                  std::array<InjectionSpec, 2> specs) {
  std::vector<std::size_t> orders;
  std::vector<WeightedAdjacencyMatrix> mats;
  for (const auto& [family, n] : blocks) {
    orders.push_back(n);
    mats.push_back(tilde_matrix(n, family));
  }
  auto m = apply_injections(direct_sum(mats), orders, specs);
  return plan(std::move(id), std::move(m), orders, middle);
}

constexpr auto P12 = BlockPair::P12;
constexpr auto P13 = BlockPair::P13;
constexpr auto P23 = BlockPair::P23;

std::optional<CasePlan> choose_two(std::size_t n, std::size_t m) {
  if (n >= 4) {
    if (n == 4 && m == 4) return plan("K4+K4+edge:K44_EDGE_8x8", F(FixedMatrix::K44_EDGE_8x8), {4, 4});
    if (n == 5 && m == 5) return plan("K5+K5:T5+T5_TILDE", sum({F(FixedMatrix::T5), F(FixedMatrix::T5_TILDE)}), {5, 5});
    if (n == 6 && m == 6) return plan("K6+K6:T6+T6_TILDE", sum({F(FixedMatrix::T6), F(FixedMatrix::T6_TILDE)}), {6, 6});
    return plan("Kn+Km:A_n+B_m", sum({A(n), B(m)}), {n, m});
  }
  if (n == 3 && m >= 5) return plan("K3+Kn:T+B_n", sum({F(FixedMatrix::T), B(m)}), {3, m});
  if (n == 2 && m >= 4) return plan("K2+Kn+edge:L", l_matrix(m), {2, m});
  if (n == 1 && m >= 4) return plan("K1+Kn+edge:L'", l_prime_matrix(m), {1, m});
  return std::nullopt;
}

std::optional<CasePlan> choose_three(std::size_t l, std::size_t m, std::size_t n, CrossPattern pattern,
                                     std::size_t middle_size) {
  if (l < 4) return std::nullopt;
  if (l >= 7) return plan("Kn+Km+Kl:A_n+B_m+C_l", sum({A(l), B(n), C(m)}), {l, n, m});
  if (m >= 7) return plan("Kk+Kn+Km:A_n+B_m+C_k", sum({A(m), B(n), C(l)}), {m, n, l});
  if (l == 6 && m == 6) {
    if (n >= 8) return plan("K6+K6+Kn:T6+T6_TILDE+B_n", sum({F(FixedMatrix::T6), F(FixedMatrix::T6_TILDE), B(n)}), {6, 6, n});
    // T6 + T6_TILDE + B_7 repeats degrees 2^3*3^2 and 2*3^4.
    if (n == 7) {
      return plan("K6+K6+K7:M666_BLOCK1+M666_BLOCK3+B_7",
                  sum({F(FixedMatrix::M666_BLOCK1), F(FixedMatrix::M666_BLOCK3), B(7)}), {6, 6, 7});
    }
    return plan("K6+K6+K6:M666", sum({F(FixedMatrix::M666_BLOCK1), F(FixedMatrix::M666_BLOCK2), F(FixedMatrix::M666_BLOCK3)}),
                {6, 6, 6});
  }
  if (l == 5 && m == 6) {
    if (n >= 7) return plan("K5+K6+Kn:T6_MOD_567+T5+B_n", sum({F(FixedMatrix::T6_MOD_567), F(FixedMatrix::T5), B(n)}), {6, 5, n});
    return plan("K5+K6+K6:M666-row1",
                sum({delete_row_column(F(FixedMatrix::M666_BLOCK1), 0), F(FixedMatrix::M666_BLOCK2), F(FixedMatrix::M666_BLOCK3)}),
                {5, 6, 6});
  }
  if (l == 5 && m == 5) {
    if (n >= 7) return plan("K5+K5+Kn:T5+T5_TILDE+B_n", sum({F(FixedMatrix::T5), F(FixedMatrix::T5_TILDE), B(n)}), {5, 5, n});
    if (n == 6) return plan("K5+K5+K6:T5+T5_TILDE+P6", sum({F(FixedMatrix::T5), F(FixedMatrix::T5_TILDE), F(FixedMatrix::P6)}), {5, 5, 6});
  }
  if (l == 4 && m == 5 && n >= 7) {
    return plan("K4+Kn+K5:A_4+B_n+T5_TILDE", sum({A(4), B(n), F(FixedMatrix::T5_TILDE)}), {4, n, 5});
  }
  if (l == 4 && m == 6 && n >= 8) return plan("K4+K6+Kn:A_4+B_6+B_n", sum({A(4), B(6), B(n)}), {4, 6, n});
  // A_4 + B_7 + T6_TILDE repeats degrees 2*3^4 and 2^3*3^2.
  if (l == 4 && m == 6 && n == 7) return plan("K4+K6+K7:C_4+T6_TILDE+A_7", sum({C(4), F(FixedMatrix::T6_TILDE), A(7)}), {4, 6, 7});
  if (l == 4 && m == 5 && n == 6) {
    return plan("K4+K5+K6:A_4+T5_TILDE_MOD_456+B_6", sum({A(4), F(FixedMatrix::T5_TILDE_MOD_456), B(6)}), {4, 5, 6});
  }

  const bool same = pattern == CrossPattern::two_edges_same_vertex;
  if (pattern != CrossPattern::two_edges_same_vertex && pattern != CrossPattern::two_edges_diff_vertices) {
    throw InvalidArgument("three-part injection cases need two chosen cross edges");
  }
  using F3 = std::array<std::pair<Family, std::size_t>, 3>;
  if (l == 5 && m == 5 && n == 5) {
    const F3 blocks{{{Family::A, 5}, {Family::B, 5}, {Family::C, 5}}};
    if (same) return injected("K5+K5+K5+2edges:B-middle/same", blocks, 1, {{{P12, 3, 3, 3}, {P23, 3, 3, 2}}});
    return injected("K5+K5+K5+2edges:B-middle/diff", blocks, 1, {{{P12, 3, 3, 3}, {P23, 1, 3, 2}}});
  }
  if (l == 4 && m == 5 && n == 5) {
    const F3 blocks{{{Family::A, 4}, {Family::B, 5}, {Family::C, 5}}};
    if (middle_size == 4) {
      if (same) return injected("K4+K5+K5+2edges:A-middle/same", blocks, 0, {{{P12, 2, 3, 2}, {P13, 2, 3, 2}}});
      return injected("K4+K5+K5+2edges:A-middle/diff", blocks, 0, {{{P12, 2, 3, 2}, {P13, 4, 3, 2}}});
    }
    if (same) return injected("K4+K5+K5+2edges:B-middle/same", blocks, 1, {{{P12, 2, 3, 3}, {P23, 3, 3, 2}}});
    return injected("K4+K5+K5+2edges:B-middle/diff", blocks, 1, {{{P12, 3, 3, 3}, {P23, 1, 3, 2}}});
  }
  if (l == 4 && m == 4 && n == 5) {
    if (middle_size == 5) {
      if (same) {
        return injected("K4+K4+K5+2edges:B5-middle/same", {{{Family::A, 4}, {Family::B, 5}, {Family::C, 4}}}, 1,
                        {{{P12, 2, 3, 3}, {P23, 3, 2, 2}}});
      }
      // Role swap: the 5-clique plays C. A second label of 3 here repeats
      // degree 3^4; label 2 on that edge is irregular.
      return injected("K4+K4+K5+2edges:C5-middle/diff", {{{Family::A, 4}, {Family::B, 4}, {Family::C, 5}}}, 2,
                      {{{P13, 2, 3, 3}, {P23, 2, 2, 2}}});
    }
    const F3 blocks{{{Family::A, 4}, {Family::B, 5}, {Family::C, 4}}};
    if (same) return injected("K4+K4+K5+2edges:C4-middle/same", blocks, 2, {{{P13, 2, 2, 3}, {P23, 3, 2, 3}}});
    return injected("K4+K4+K5+2edges:C4-middle/diff", blocks, 2, {{{P13, 2, 2, 3}, {P23, 3, 1, 3}}});
  }
  if (l == 4 && m == 4 && n == 4) {
    const F3 blocks{{{Family::A, 4}, {Family::B, 4}, {Family::C, 4}}};
    if (same) return injected("K4+K4+K4+2edges:C-middle/same", blocks, 2, {{{P13, 2, 2, 3}, {P23, 3, 2, 3}}});
    return injected("K4+K4+K4+2edges:C-middle/diff", blocks, 2, {{{P13, 2, 2, 3}, {P23, 3, 1, 3}}});
  }
  return std::nullopt;
}

}  // namespace

std::optional<CasePlan> choose_case(std::span<const std::size_t> sorted_sizes, CrossPattern pattern,
                                    std::size_t middle_size) {
  if (!std::is_sorted(sorted_sizes.begin(), sorted_sizes.end())) throw InvalidArgument("sizes must be sorted");
  if (is_fallback_shape(sorted_sizes)) return std::nullopt;
  switch (sorted_sizes.size()) {
    case 1: {
      const auto n = sorted_sizes[0];
      if (n == 3) return plan("K3:T", F(FixedMatrix::T), {3});
      return plan("Kn:A_n", A(n), {n});
    }
    case 2: return choose_two(sorted_sizes[0], sorted_sizes[1]);
    case 3: return choose_three(sorted_sizes[0], sorted_sizes[1], sorted_sizes[2], pattern, middle_size);
    default: return std::nullopt;
  }
}

bool is_fallback_shape(std::span<const std::size_t> s) {
  switch (s.size()) {
    case 1: return s[0] <= 2;
    case 2: return (s[0] <= 2 && s[1] <= 3) || (s[0] == 3 && s[1] <= 4);
    case 3:
      return s[0] <= 3 || (s[0] == 4 && s[1] == 4 && s[2] >= 6) || (s[0] == 4 && s[1] == 6 && s[2] == 6);
    default: return true;
  }
}

namespace {

void require_construction_input(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("graph has no vertices");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  if (has_isolated_vertex_or_edge(g)) throw PreconditionError("graph has an isolated vertex or an isolated edge");
}

DispatchCase base_case(const CliqueCover& cover, const CrossEdgeSelection& selection) {
  DispatchCase trace;
  trace.cover_sizes = cover.sizes;
  trace.pattern = selection.pattern;
  trace.chosen_edges = selection.chosen;
  return trace;
}

std::size_t block_of_row(std::span<const std::size_t> offsets, std::size_t row) {
  std::size_t b = 0;
  while (b + 1 < offsets.size() && offsets[b + 1] <= row) ++b;
  return b;
}

// Aligns a block construction to the graph: assigns parts to blocks, maps
// the chosen cross edges onto the injected entries, fills the rest of each
// block in ascending vertex order, and labels surplus edges 1.
ConstructionOutcome realize(const CasePlan& plan, const Graph& g, const CliqueCover& cover,
                            const CrossEdgeSelection& selection) {
  const std::size_t parts = cover.part_count();
  if (plan.block_sizes.size() != parts) throw InternalError("plan block count does not match cover");

  std::vector<std::size_t> part_of_block(parts, SIZE_MAX);
  std::vector<bool> used(parts, false);
  if (plan.middle_block) {
    if (!selection.middle_part) throw InternalError("injection plan without a middle part");
    part_of_block[*plan.middle_block] = *selection.middle_part;
    used[*selection.middle_part] = true;
  }
  for (std::size_t b = 0; b < parts; ++b) {
    if (part_of_block[b] != SIZE_MAX) continue;
    for (std::size_t p = 0; p < parts; ++p) {
      if (!used[p] && cover.sizes[p] == plan.block_sizes[b]) {
        part_of_block[b] = p;
        used[p] = true;
        break;
      }
    }
    if (part_of_block[b] == SIZE_MAX) throw InternalError("no cover part fits block " + std::to_string(b));
  }
  for (std::size_t b = 0; b < parts; ++b) {
    if (cover.sizes[part_of_block[b]] != plan.block_sizes[b]) throw InternalError("block size mismatch");
  }

  std::vector<std::size_t> offsets(parts, 0);
  for (std::size_t b = 1; b < parts; ++b) offsets[b] = offsets[b - 1] + plan.block_sizes[b - 1];

  // Pin the endpoints of every chosen edge that the plan labels.
  std::vector<std::size_t> row_of(g.vertex_count(), SIZE_MAX);
  std::vector<Vertex> vertex_at(plan.matrix.order(), UINT32_MAX);
  auto pin = [&](Vertex v, std::size_t row) {
    if ((row_of[v] != SIZE_MAX && row_of[v] != row) || (vertex_at[row] != UINT32_MAX && vertex_at[row] != v)) {
      throw InternalError("cross-edge alignment conflict at row " + std::to_string(row + 1));
    }
    row_of[v] = row;
    vertex_at[row] = v;
  };
  for (std::size_t r = 0; r < plan.matrix.order(); ++r) {
    for (std::size_t c = r + 1; c < plan.matrix.order(); ++c) {
      if (plan.matrix.at(r, c) == 0) continue;
      const auto br = block_of_row(offsets, r);
      const auto bc = block_of_row(offsets, c);
      if (br == bc) continue;
      const auto pr = part_of_block[br];
      const auto pc = part_of_block[bc];
      const CrossEdge* match = nullptr;
      for (const auto& e : selection.chosen) {
        if ((e.part_a == pr && e.part_b == pc) || (e.part_a == pc && e.part_b == pr)) match = &e;
      }
      if (!match) throw InternalError("plan needs a cross edge the selection does not provide");
      pin(match->part_a == pr ? match->u : match->v, r);
      pin(match->part_a == pr ? match->v : match->u, c);
    }
  }
  for (std::size_t b = 0; b < parts; ++b) {
    std::size_t next = offsets[b];
    for (Vertex v : cover.parts[part_of_block[b]]) {
      if (row_of[v] != SIZE_MAX) continue;
      while (vertex_at[next] != UINT32_MAX) ++next;
      row_of[v] = next;
      vertex_at[next] = v;
    }
  }

  std::vector<Label> labels(g.edge_count(), 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const Label entry = plan.matrix.at(row_of[e.u], row_of[e.v]);
    if (cover.part_of[e.u] == cover.part_of[e.v] && entry == 0) {
      throw InternalError("construction leaves a clique edge unlabeled");
    }
    if (entry != 0) labels[i] = entry;
  }

  ConstructionOutcome outcome;
  outcome.labeling = EdgeLabeling(g, std::move(labels), 3);
  outcome.strength = 3;
  outcome.source = ConstructionSource::theorem;
  outcome.case_trace = base_case(cover, selection);
  outcome.case_trace.construction_id = plan.id;
  outcome.case_trace.block_of_part.assign(parts, 0);
  outcome.case_trace.vertex_maps.assign(parts, {});
  for (std::size_t b = 0; b < parts; ++b) {
    outcome.case_trace.block_of_part[part_of_block[b]] = b;
    outcome.case_trace.vertex_maps[part_of_block[b]].assign(
        vertex_at.begin() + static_cast<std::ptrdiff_t>(offsets[b]),
        vertex_at.begin() + static_cast<std::ptrdiff_t>(offsets[b] + plan.block_sizes[b]));
  }
  outcome.construction = plan.matrix;
  outcome.row_vertex = std::move(vertex_at);

  if (outcome.labeling.max_label() > 3) throw InternalError("construction uses a label above 3");
  if (!is_product_irregular(outcome.labeling).ok) {
    throw InternalError("construction " + plan.id + " failed verification");
  }
  return outcome;
}

// Search on the cover's cliques plus the chosen cross edges, surplus edges
// pinned to 1. For three parts with a clique of order >= 4, first try with
// the largest clique pinned to B_n at strength 3.
ConstructionOutcome fallback(const Graph& g, const CliqueCover& cover, const CrossEdgeSelection& selection,
                             const ConstructOptions& options) {
  std::vector<Label> pinned(g.edge_count(), 0);
  for (const auto& e : selection.surplus) pinned[*g.edge_index(e.u, e.v)] = 1;

  ConstructionOutcome outcome;
  outcome.source = ConstructionSource::search_fallback;
  outcome.case_trace = base_case(cover, selection);
  outcome.case_trace.construction_id = "fallback";

  auto attempt = [&](std::span<const Label> pins, Label s, std::string_view stage) -> bool {
    const auto free_edges = static_cast<std::size_t>(std::count(pins.begin(), pins.end(), 0u));
    if (free_edges <= options.exhaustive_edge_limit) {
      SearchOptions search;
      search.node_budget = options.node_budget;
      auto result = find_labeling(g, s, pins, search);
      outcome.nodes_explored += result.nodes;
      if (result.status == SearchStatus::budget_exhausted) {
        throw BudgetExhausted("fallback search exceeded its node budget", outcome.nodes_explored);
      }
      if (result.status == SearchStatus::found) {
        outcome.labeling = std::move(*result.labeling);
        outcome.notes = std::string(stage) + ": exhaustive search at strength " + std::to_string(s);
        return true;
      }
      outcome.notes += std::string(stage) + ": strength " + std::to_string(s) + " exhausted; ";
      return false;
    }
    for (std::size_t r = 0; r < options.restarts; ++r) {
      SearchOptions search;
      search.node_budget = options.restart_budget;
      search.seed = options.seed + r;
      auto result = find_labeling(g, s, pins, search);
      outcome.nodes_explored += result.nodes;
      if (result.status == SearchStatus::found) {
        outcome.labeling = std::move(*result.labeling);
        outcome.notes = std::string(stage) + ": randomized restart " + std::to_string(r) + " at strength " +
                        std::to_string(s);
        return true;
      }
      if (result.status == SearchStatus::exhausted) {
        outcome.notes += std::string(stage) + ": strength " + std::to_string(s) + " exhausted; ";
        return false;
      }
    }
    outcome.notes += std::string(stage) + ": strength " + std::to_string(s) + " restarts inconclusive; ";
    return false;
  };

  auto finish = [&]() {
    outcome.strength = outcome.labeling.strength();
    if (!is_product_irregular(outcome.labeling).ok) throw InternalError("fallback labeling failed verification");
    return outcome;
  };

  if (cover.part_count() == 3 && cover.sizes.back() >= 4) {
    const auto& big = cover.parts.back();
    const auto b = named_family(big.size(), Family::B);
    std::vector<Label> structured = pinned;
    for (std::size_t i = 0; i < big.size(); ++i)
      for (std::size_t j = i + 1; j < big.size(); ++j) structured[*g.edge_index(big[i], big[j])] = b.at(i, j);
    if (attempt(structured, 3, "B_n-pinned")) {
      outcome.case_trace.construction_id = "fallback:B_n-pinned";
      return finish();
    }
  }
  const auto free_edges = static_cast<std::size_t>(std::count(pinned.begin(), pinned.end(), 0u));
  const Label first = free_edges <= options.exhaustive_edge_limit ? 1 : 3;
  for (Label s = first; s <= 8; ++s) {
    if (attempt(pinned, s, "core")) {
      outcome.case_trace.construction_id = "fallback:core";
      return finish();
    }
  }
  throw BudgetExhausted("fallback search found no labeling up to strength 8", outcome.nodes_explored);
}

ConstructionOutcome dispatch(const Graph& g, const CliqueCover& cover, const ConstructOptions& options) {
  const auto selection = select_cross_edges(g, cover);
  const std::size_t middle_size = selection.middle_part ? cover.sizes[*selection.middle_part] : 0;
  if (auto chosen = choose_case(cover.sizes, selection.pattern, middle_size)) {
    return realize(*chosen, g, cover, selection);
  }
  return fallback(g, cover, selection, options);
}

}  // namespace

ConstructionOutcome label_two_cliques(const Graph& g, const CliqueCover& cover, const ConstructOptions& options) {
  if (cover.part_count() != 2) throw InvalidArgument("label_two_cliques needs a two-part cover");
  require_construction_input(g);
  return dispatch(g, cover, options);
}

ConstructionOutcome label_three_cliques(const Graph& g, const CliqueCover& cover, const ConstructOptions& options) {
  if (cover.part_count() != 3) throw InvalidArgument("label_three_cliques needs a three-part cover");
  require_construction_input(g);
  return dispatch(g, cover, options);
}

ConstructionOutcome construct_labeling(const Graph& g, const ConstructOptions& options) {
  require_construction_input(g);
  auto cover = clique_cover(g, 3);
  if (!cover) throw Unsupported("clique cover number exceeds 3");
  return dispatch(g, *cover, options);
}

}  // namespace pistr
