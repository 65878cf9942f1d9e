#include "pistr/pistr.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/cover_engine.hpp"
#include "core/errors.hpp"
#include "core/solver.hpp"
#include "core/verifier.hpp"
#include "io/document.hpp"
#include "io/matrix_expr.hpp"
#include "io/report.hpp"

struct pistr_graph {
  pistr::GraphDocument doc;
};

struct pistr_matrix {
  pistr::WeightedAdjacencyMatrix m;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

pistr_status fail(pistr_status status, const char* message, std::size_t line = 0) {
  last_error = message;
  last_error_line = line;
  return status;
}

template <class F>
pistr_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    last_error_line = 0;
    return PISTR_OK;
  } catch (const pistr::ParseError& e) {
    return fail(PISTR_ERR_PARSE, e.what(), e.line());
  } catch (const pistr::InvalidArgument& e) {
    return fail(PISTR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const pistr::PreconditionError& e) {
    return fail(PISTR_ERR_PRECONDITION, e.what());
  } catch (const pistr::BudgetExhausted& e) {
    return fail(PISTR_ERR_BUDGET, e.what());
  } catch (const pistr::Unsupported& e) {
    return fail(PISTR_ERR_UNSUPPORTED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PISTR_ERR_INTERNAL, "out of memory");
  } catch (const std::out_of_range& e) {
    return fail(PISTR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(PISTR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PISTR_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_json(char** out, const nlohmann::json& j) {
  if (out) *out = copy_string(j.dump(2));
}

const pistr::EdgeLabeling& require_labeling(const pistr_graph* g) {
  if (!g->doc.labeling) throw pistr::InvalidArgument("graph carries no labels");
  return *g->doc.labeling;
}

pistr_graph* wrap(pistr::Graph g) { return new pistr_graph{{std::move(g), std::nullopt}}; }
pistr_graph* wrap(pistr::EdgeLabeling l) { return new pistr_graph{{l.graph(), std::move(l)}}; }

}  // namespace

extern "C" {

const char* pistr_status_name(pistr_status status) {
  switch (status) {
    case PISTR_OK: return "ok";
    case PISTR_ERR_NULL_ARG: return "null argument";
    case PISTR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PISTR_ERR_PARSE: return "parse error";
    case PISTR_ERR_PRECONDITION: return "precondition violated";
    case PISTR_ERR_BUDGET: return "node budget exhausted";
    case PISTR_ERR_UNSUPPORTED: return "unsupported";
    case PISTR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pistr_last_error(void) { return last_error.c_str(); }
size_t pistr_last_error_line(void) { return last_error_line; }
void pistr_string_free(char* s) { delete[] s; }
uint64_t pistr_default_node_budget(void) { return pistr::kDefaultNodeBudget; }

pistr_status pistr_graph_parse(const char* text, pistr_graph** out) {
  if (!text || !out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = new pistr_graph{pistr::parse_graph(text)}; });
}

pistr_status pistr_graph_complete(uint32_t n, pistr_graph** out) {
  if (!out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = wrap(pistr::complete_graph(n)); });
}

pistr_status pistr_graph_union(const pistr_graph* a, const pistr_graph* b, pistr_graph** out) {
  if (!a || !b || !out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = wrap(pistr::disjoint_union(a->doc.graph, b->doc.graph)); });
}

pistr_status pistr_graph_add_edge(pistr_graph* g, uint32_t u, uint32_t v) {
  if (!g) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] {
    g->doc.graph = pistr::add_cross_edge(g->doc.graph, u, v);
    g->doc.labeling.reset();
  });
}

pistr_status pistr_graph_emit(const pistr_graph* g, char** out) {
  if (!g || !out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] {
    *out = copy_string(g->doc.labeling ? pistr::emit_graph(*g->doc.labeling) : pistr::emit_graph(g->doc.graph));
  });
}

uint32_t pistr_graph_vertex_count(const pistr_graph* g) { return g ? g->doc.graph.vertex_count() : 0; }
size_t pistr_graph_edge_count(const pistr_graph* g) { return g ? g->doc.graph.edge_count() : 0; }
int pistr_graph_is_labeled(const pistr_graph* g) { return g && g->doc.labeling ? 1 : 0; }
void pistr_graph_free(pistr_graph* g) { delete g; }

pistr_status pistr_matrix_build(const char* expression, pistr_matrix** out) {
  if (!expression || !out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = new pistr_matrix{pistr::build_matrix_expression(expression)}; });
}

pistr_status pistr_matrix_from_entries(const int64_t* entries, size_t order, pistr_matrix** out) {
  if ((!entries && order > 0) || !out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] {
    std::vector<std::vector<std::int64_t>> rows(order, std::vector<std::int64_t>(order));
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) rows[i][j] = entries[i * order + j];
    *out = new pistr_matrix{pistr::WeightedAdjacencyMatrix::from_rows(rows)};
  });
}

size_t pistr_matrix_order(const pistr_matrix* m) { return m ? m->m.order() : 0; }

pistr_status pistr_matrix_entry(const pistr_matrix* m, size_t i, size_t j, uint32_t* out) {
  if (!m || !out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  if (i >= m->m.order() || j >= m->m.order()) return fail(PISTR_ERR_INVALID_ARGUMENT, "index out of range");
  *out = m->m.at(i, j);
  return PISTR_OK;
}

pistr_status pistr_matrix_to_graph(const pistr_matrix* m, pistr_graph** out) {
  if (!m || !out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = wrap(pistr::matrix_to_labeled_graph(m->m)); });
}

pistr_status pistr_matrix_format(const pistr_matrix* m, char** out) {
  if (!m || !out) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] {
    std::string text;
    for (std::size_t i = 0; i < m->m.order(); ++i) {
      for (std::size_t j = 0; j < m->m.order(); ++j) {
        if (j > 0) text += ' ';
        text += std::to_string(m->m.at(i, j));
      }
      text += '\n';
    }
    *out = copy_string(text);
  });
}

void pistr_matrix_free(pistr_matrix* m) { delete m; }

pistr_status pistr_matrix_check(const pistr_matrix* m, int* ok, char** json) {
  if (!m || !ok) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] {
    const auto report = pistr::check_matrix(m->m);
    *ok = report.ok ? 1 : 0;
    auto j = pistr::verify_json(report);
    j["command"] = "check";
    set_json(json, j);
  });
}

pistr_status pistr_verify(const pistr_graph* g, int* ok, char** json) {
  if (!g || !ok) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] {
    const auto report = pistr::is_product_irregular(require_labeling(g));
    *ok = report.ok ? 1 : 0;
    set_json(json, pistr::verify_json(report));
  });
}

void pistr_ps_options_init(pistr_ps_options* options) {
  if (!options) return;
  options->s_max = 6;
  options->node_budget = pistr::kDefaultNodeBudget;
  options->method = PISTR_PS_AUTO;
  options->pruning = 1;
}

pistr_status pistr_ps(const pistr_graph* g, const pistr_ps_options* options, pistr_ps_result* result,
                      pistr_graph** certificate, char** json) {
  if (!g || !result) return fail(PISTR_ERR_NULL_ARG, "null argument");
  pistr_ps_options opts;
  pistr_ps_options_init(&opts);
  if (options) opts = *options;
  return guarded([&] {
    auto method = opts.method;
    if (method == PISTR_PS_AUTO) method = pistr::is_connected(g->doc.graph) ? PISTR_PS_DFS : PISTR_PS_COMPONENTS;
    pistr::PsResult r;
    if (method == PISTR_PS_COMPONENTS) {
      r = pistr::ps_exact_disconnected(g->doc.graph, opts.s_max, opts.node_budget);
    } else if (method == PISTR_PS_DFS) {
      pistr::SearchOptions search;
      search.node_budget = opts.node_budget;
      search.pruning = opts.pruning != 0;
      r = pistr::ps_exact(g->doc.graph, opts.s_max, search);
    } else {
      throw pistr::InvalidArgument("unknown ps method");
    }
    switch (r.status) {
      case pistr::PsStatus::exact: result->status = PISTR_PS_EXACT; break;
      case pistr::PsStatus::above_limit: result->status = PISTR_PS_ABOVE_LIMIT; break;
      case pistr::PsStatus::budget_exhausted: result->status = PISTR_PS_BUDGET_EXHAUSTED; break;
    }
    result->value = r.value;
    result->nodes = r.nodes_explored;
    set_json(json, pistr::ps_json(r, method == PISTR_PS_DFS ? "dfs" : "components"));
    if (certificate) *certificate = r.certificate ? wrap(*r.certificate) : nullptr;
  });
}

pistr_status pistr_cover(const pistr_graph* g, uint32_t k_max, uint32_t* k, char** json) {
  if (!g || !k) return fail(PISTR_ERR_NULL_ARG, "null argument");
  return guarded([&] {
    const auto cover = pistr::clique_cover(g->doc.graph, k_max);
    *k = cover ? static_cast<uint32_t>(cover->part_count()) : 0;
    set_json(json, pistr::cover_json(cover, k_max));
  });
}

void pistr_construct_options_init(pistr_construct_options* options) {
  if (!options) return;
  options->seed = 1;
  options->node_budget = pistr::kDefaultNodeBudget;
}

pistr_status pistr_construct(const pistr_graph* g, const pistr_construct_options* options, pistr_graph** labeled,
                             char** json) {
  if (!g) return fail(PISTR_ERR_NULL_ARG, "null argument");
  pistr_construct_options opts;
  pistr_construct_options_init(&opts);
  if (options) opts = *options;
  return guarded([&] {
    pistr::ConstructOptions construct;
    construct.seed = opts.seed;
    construct.node_budget = opts.node_budget;
    construct.restart_budget = std::min<std::uint64_t>(construct.restart_budget, opts.node_budget);
    auto outcome = pistr::construct_labeling(g->doc.graph, construct);
    set_json(json, pistr::construct_json(outcome));
    if (labeled) *labeled = wrap(std::move(outcome.labeling));
  });
}

}  // extern "C"
