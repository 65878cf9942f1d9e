#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "core/cover_engine.hpp"
#include "core/solver.hpp"
#include "core/verifier.hpp"

namespace pistr {

inline constexpr int kReportSchema = 1;

// Vertex ids in reports are 1-based, like the document format.

nlohmann::json degrees_json(const std::vector<ProductDegree>& degrees);
nlohmann::json verify_json(const IrregularityReport& report);
nlohmann::json ps_json(const PsResult& result, std::string_view method);
nlohmann::json cover_json(const std::optional<CliqueCover>& cover, std::size_t k_max);
nlohmann::json construct_json(const ConstructionOutcome& outcome);

std::string_view ps_status_name(PsStatus status);

}  // namespace pistr
