#pragma once

#include "pmadm/decision.hpp"
#include "pmadm/tree_analysis.hpp"

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace pmadm {

// Reports are JSON with insertion-ordered keys so identical inputs give
// byte-identical files.
using Json = nlohmann::ordered_json;

Json ranking_report(const DecisionMatrix& matrix, const Ranking& ranking, NormScheme scheme,
                    const std::optional<std::string>& pivot_label = std::nullopt,
                    const DecomposingTree* tree = nullptr);

Json tree_report(const TreeMetrics& metrics);

std::string report_to_string(const Json& report);
void write_report(const std::filesystem::path& path, const Json& report);
Json read_report(const std::filesystem::path& path);

const char* scheme_name(NormScheme scheme);
NormScheme parse_scheme(const std::string& name);  // "max" | "minmax"

const char* algorithm_name(Algorithm algorithm);

}  // namespace pmadm
