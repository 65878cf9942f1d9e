#include "report.hpp"

#include "document.hpp"

namespace pistr {

using nlohmann::json;

namespace {

json edge_json(const CrossEdge& e) {
  return {{"parts", {e.part_a, e.part_b}}, {"edge", {e.u + 1, e.v + 1}}};
}

json vertices_json(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

}  // namespace

std::string_view ps_status_name(PsStatus status) {
  switch (status) {
    case PsStatus::exact: return "exact";
    case PsStatus::above_limit: return "above_limit";
    case PsStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

json degrees_json(const std::vector<ProductDegree>& degrees) {
  json out = json::array();
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    json entry = {{"vertex", v + 1}, {"degree", degrees[v].to_string()}};
    if (auto p = degrees[v].as_pair23()) entry["pair"] = {p->first, p->second};
    out.push_back(std::move(entry));
  }
  return out;
}

json verify_json(const IrregularityReport& report) {
  json out = {{"schema", kReportSchema}, {"command", "verify"}, {"ok", report.ok}};
  out["witness"] = report.witness ? json{report.witness->first + 1, report.witness->second + 1} : json(nullptr);
  out["degrees"] = degrees_json(report.degrees);
  return out;
}

json ps_json(const PsResult& result, std::string_view method) {
  json out = {{"schema", kReportSchema},
              {"command", "ps"},
              {"method", method},
              {"status", ps_status_name(result.status)},
              {"s_max", result.s_max},
              {"nodes", result.nodes_explored}};
  out["value"] = result.status == PsStatus::exact ? json(result.value) : json(nullptr);
  if (result.status == PsStatus::budget_exhausted) out["searching"] = result.value;
  if (result.certificate) {
    out["certificate"] = emit_graph(*result.certificate);
    out["degrees"] = degrees_json(is_product_irregular(*result.certificate).degrees);
  }
  return out;
}

json cover_json(const std::optional<CliqueCover>& cover, std::size_t k_max) {
  json out = {{"schema", kReportSchema}, {"command", "cover"}, {"k_max", k_max}, {"found", cover.has_value()}};
  if (!cover) return out;
  out["k"] = cover->part_count();
  out["sizes"] = cover->sizes;
  json parts = json::array();
  for (const auto& p : cover->parts) parts.push_back(vertices_json(p));
  out["parts"] = std::move(parts);
  json cross = json::array();
  for (const auto& e : cover->cross_edges) cross.push_back(edge_json(e));
  out["cross_edges"] = std::move(cross);
  return out;
}

json construct_json(const ConstructionOutcome& outcome) {
  const auto& trace = outcome.case_trace;
  json case_trace = {{"cover_sizes", trace.cover_sizes},
                     {"pattern", cross_pattern_name(trace.pattern)},
                     {"construction", trace.construction_id},
                     {"block_of_part", trace.block_of_part}};
  json maps = json::array();
  for (const auto& m : trace.vertex_maps) maps.push_back(vertices_json(m));
  case_trace["vertex_maps"] = std::move(maps);
  json chosen = json::array();
  for (const auto& e : trace.chosen_edges) chosen.push_back(edge_json(e));
  case_trace["chosen_edges"] = std::move(chosen);

  const auto report = is_product_irregular(outcome.labeling);
  json out = {{"schema", kReportSchema},
              {"command", "construct"},
              {"source", construction_source_name(outcome.source)},
              {"strength", outcome.strength},
              {"verified", report.ok},
              {"nodes", outcome.nodes_explored},
              {"case_trace", std::move(case_trace)},
              {"labeling", emit_graph(outcome.labeling)},
              {"degrees", degrees_json(report.degrees)}};
  if (!outcome.notes.empty()) out["notes"] = outcome.notes;
  if (outcome.construction) {
    out["matrix"] = outcome.construction->to_rows();
    out["row_vertex"] = vertices_json(outcome.row_vertex);
  }
  return out;
}

}  // namespace pistr
