// pistr: command-line front end over the C API.
//
// Exit codes: 0 success / verdict true, 1 verdict false / nothing found,
// 2 usage, input or budget errors.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pistr/pistr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct GraphDeleter {
  void operator()(pistr_graph* g) const { pistr_graph_free(g); }
};
struct MatrixDeleter {
  void operator()(pistr_matrix* m) const { pistr_matrix_free(m); }
};
using GraphPtr = std::unique_ptr<pistr_graph, GraphDeleter>;
using MatrixPtr = std::unique_ptr<pistr_matrix, MatrixDeleter>;

struct Failure {
  pistr_status status;
  std::string message;
};

void check(pistr_status status) {
  if (status != PISTR_OK) throw Failure{status, pistr_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pistr_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Failure{PISTR_ERR_INVALID_ARGUMENT, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphPtr load_graph(const std::string& path) {
  pistr_graph* g = nullptr;
  check(pistr_graph_parse(read_input(path).c_str(), &g));
  return GraphPtr(g);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{PISTR_ERR_INVALID_ARGUMENT, "cannot write " + path};
  out << text;
}

// PISTR_BUDGET replaces the built-in default; an explicit --budget wins.
std::uint64_t node_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PISTR_BUDGET")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw Failure{PISTR_ERR_INVALID_ARGUMENT, "PISTR_BUDGET is not a number"};
    return value;
  }
  return pistr_default_node_budget();
}

// "K3 K3" with edges "3:4" (1-based, ids after concatenation).
GraphPtr build_graph(const std::vector<std::string>& parts, const std::vector<std::string>& edges) {
  GraphPtr g;
  for (const auto& p : parts) {
    if (p.size() < 2 || p[0] != 'K') throw Failure{PISTR_ERR_INVALID_ARGUMENT, "expected K<n>, got " + p};
    const auto n = std::stoul(p.substr(1));
    pistr_graph* k = nullptr;
    check(pistr_graph_complete(static_cast<uint32_t>(n), &k));
    GraphPtr part(k);
    if (!g) {
      g = std::move(part);
      continue;
    }
    pistr_graph* u = nullptr;
    check(pistr_graph_union(g.get(), part.get(), &u));
    g.reset(u);
  }
  if (!g) throw Failure{PISTR_ERR_INVALID_ARGUMENT, "no graph parts given"};
  for (const auto& e : edges) {
    const auto colon = e.find(':');
    if (colon == std::string::npos) throw Failure{PISTR_ERR_INVALID_ARGUMENT, "expected u:v, got " + e};
    const auto u = std::stoul(e.substr(0, colon));
    const auto v = std::stoul(e.substr(colon + 1));
    if (u == 0 || v == 0) throw Failure{PISTR_ERR_INVALID_ARGUMENT, "vertex ids are 1-based"};
    check(pistr_graph_add_edge(g.get(), static_cast<uint32_t>(u - 1), static_cast<uint32_t>(v - 1)));
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product-irregular edge labelings: generate, verify, solve, construct"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a JSON report");

  auto* gen = app.add_subcommand("gen", "Emit family graphs and matrices");
  gen->require_subcommand(1);
  auto* gen_graph = gen->add_subcommand("graph", "Disjoint union of cliques plus extra edges");
  std::vector<std::string> gen_parts, gen_edges;
  gen_graph->add_option("parts", gen_parts, "Cliques such as K3 K5")->required();
  gen_graph->add_option("--edge", gen_edges, "Extra edge u:v, 1-based over the union");
  auto* gen_matrix = gen->add_subcommand("matrix", "Block matrix such as \"A4+B9\"");
  std::string gen_expr;
  bool gen_as_graph = false;
  gen_matrix->add_option("expression", gen_expr, "Blocks joined by '+', optional '@ P:i:j:w,...'")->required();
  gen_matrix->add_flag("--graph", gen_as_graph, "Emit the labeled graph document instead of rows");

  auto* verify = app.add_subcommand("verify", "Check a labeled document or a matrix");
  std::string verify_path;
  std::string verify_matrix;
  auto* verify_file_opt = verify->add_option("file", verify_path, "Labeled document, '-' for stdin");
  auto* verify_matrix_opt = verify->add_option("--matrix", verify_matrix, "Matrix expression instead of a file");
  verify_file_opt->excludes(verify_matrix_opt);

  auto* ps = app.add_subcommand("ps", "Exact product irregularity strength");
  std::string ps_path;
  std::uint32_t s_max = 6;
  std::optional<std::uint64_t> ps_budget;
  std::string method = "auto";
  bool no_pruning = false;
  ps->add_option("file", ps_path, "Document, '-' for stdin")->required();
  ps->add_option("--s-max", s_max, "Largest strength tried")->capture_default_str();
  ps->add_option("--budget", ps_budget, "DFS node budget");
  ps->add_option("--method", method, "auto, dfs or components")
      ->check(CLI::IsMember({"auto", "dfs", "components"}))
      ->capture_default_str();
  ps->add_flag("--no-pruning", no_pruning, "dfs: check only complete labelings");

  auto* cover = app.add_subcommand("cover", "Minimum clique cover");
  std::string cover_path;
  std::uint32_t k_max = 3;
  cover->add_option("file", cover_path, "Document, '-' for stdin")->required();
  cover->add_option("--k-max", k_max, "Largest cover size tried")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Label a graph of clique cover number at most 3");
  std::string construct_path;
  std::string construct_out;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> construct_budget;
  construct->add_option("file", construct_path, "Document, '-' for stdin")->required();
  construct->add_option("--seed", seed, "Seed for randomized fallback search")->capture_default_str();
  construct->add_option("--budget", construct_budget, "Fallback node budget");
  construct->add_option("-o,--output", construct_out, "Write the labeled document here");

  // --json is accepted after the subcommand too.
  for (auto* sub : {verify, ps, cover, construct, gen_matrix}) sub->add_flag("--json", json, "Print a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (gen_graph->parsed()) {
      auto g = build_graph(gen_parts, gen_edges);
      char* text = nullptr;
      check(pistr_graph_emit(g.get(), &text));
      std::cout << take(text);
      return kExitOk;
    }

    if (gen_matrix->parsed()) {
      pistr_matrix* m = nullptr;
      check(pistr_matrix_build(gen_expr.c_str(), &m));
      MatrixPtr matrix(m);
      char* text = nullptr;
      if (gen_as_graph) {
        pistr_graph* g = nullptr;
        check(pistr_matrix_to_graph(matrix.get(), &g));
        GraphPtr graph(g);
        check(pistr_graph_emit(graph.get(), &text));
      } else {
        check(pistr_matrix_format(matrix.get(), &text));
      }
      std::cout << take(text);
      return kExitOk;
    }

    if (verify->parsed()) {
      int ok = 0;
      char* report = nullptr;
      if (!verify_matrix.empty()) {
        pistr_matrix* m = nullptr;
        check(pistr_matrix_build(verify_matrix.c_str(), &m));
        MatrixPtr matrix(m);
        check(pistr_matrix_check(matrix.get(), &ok, &report));
      } else {
        if (verify_path.empty()) throw Failure{PISTR_ERR_INVALID_ARGUMENT, "verify needs a file or --matrix"};
        auto g = load_graph(verify_path);
        check(pistr_verify(g.get(), &ok, &report));
      }
      const auto text = take(report);
      if (json) std::cout << text << "\n";
      else std::cout << (ok ? "product-irregular" : "not product-irregular") << "\n";
      return ok ? kExitOk : kExitFalse;
    }

    if (ps->parsed()) {
      auto g = load_graph(ps_path);
      pistr_ps_options options;
      pistr_ps_options_init(&options);
      options.s_max = s_max;
      options.node_budget = node_budget(ps_budget);
      options.method = method == "dfs" ? PISTR_PS_DFS : method == "components" ? PISTR_PS_COMPONENTS : PISTR_PS_AUTO;
      options.pruning = no_pruning ? 0 : 1;
      pistr_ps_result result{};
      pistr_graph* cert = nullptr;
      char* report = nullptr;
      check(pistr_ps(g.get(), &options, &result, &cert, &report));
      GraphPtr certificate(cert);
      const auto text = take(report);
      if (json) {
        std::cout << text << "\n";
      } else if (result.status == PISTR_PS_EXACT) {
        std::cout << "ps = " << result.value << "\n";
        char* doc = nullptr;
        check(pistr_graph_emit(certificate.get(), &doc));
        std::cout << take(doc);
      } else if (result.status == PISTR_PS_ABOVE_LIMIT) {
        std::cout << "ps > " << s_max << "\n";
      } else {
        std::cout << "budget exhausted while searching strength " << result.value << " (" << result.nodes
                  << " nodes)\n";
      }
      switch (result.status) {
        case PISTR_PS_EXACT: return kExitOk;
        case PISTR_PS_ABOVE_LIMIT: return kExitFalse;
        default: return kExitError;
      }
    }

    if (cover->parsed()) {
      auto g = load_graph(cover_path);
      std::uint32_t k = 0;
      char* report = nullptr;
      check(pistr_cover(g.get(), k_max, &k, &report));
      const auto text = take(report);
      if (json) std::cout << text << "\n";
      else if (k > 0) std::cout << "clique cover number = " << k << "\n";
      else std::cout << "clique cover number > " << k_max << "\n";
      return k > 0 ? kExitOk : kExitFalse;
    }

    if (construct->parsed()) {
      auto g = load_graph(construct_path);
      pistr_construct_options options;
      pistr_construct_options_init(&options);
      options.seed = seed;
      options.node_budget = node_budget(construct_budget);
      pistr_graph* out = nullptr;
      char* report = nullptr;
      const auto status = pistr_construct(g.get(), &options, &out, &report);
      if (status == PISTR_ERR_UNSUPPORTED) {
        std::cerr << "pistr: " << pistr_last_error() << "\n";
        return kExitFalse;
      }
      check(status);
      GraphPtr labeled(out);
      const auto text = take(report);
      char* doc = nullptr;
      check(pistr_graph_emit(labeled.get(), &doc));
      const auto document = take(doc);
      if (json) {
        std::cout << text << "\n";
        if (!construct_out.empty()) write_output(construct_out, document);
      } else {
        write_output(construct_out, document);
      }
      return kExitOk;
    }
  } catch (const Failure& f) {
    std::cerr << "pistr: " << pistr_status_name(f.status) << ": " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "pistr: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
