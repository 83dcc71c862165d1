#include "pmadm/report.hpp"

#include <fstream>
#include <stdexcept>

namespace pmadm {

const char* scheme_name(NormScheme scheme) {
    return scheme == NormScheme::max ? "max" : "minmax";
}

NormScheme parse_scheme(const std::string& name) {
    if (name == "max") return NormScheme::max;
    if (name == "minmax") return NormScheme::min_max;
    throw std::invalid_argument("unknown scheme '" + name + "' (use max or minmax)");
}

const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::madm: return "madm";
        case Algorithm::pmadm: return "pmadm";
        case Algorithm::lpmadm: return "lpmadm";
    }
    return "?";
}

Json ranking_report(const DecisionMatrix& matrix, const Ranking& ranking, NormScheme scheme,
                    const std::optional<std::string>& pivot_label, const DecomposingTree* tree) {
    Json rep;
    rep["algorithm"] = algorithm_name(ranking.algorithm);
    rep["scheme"] = scheme_name(scheme);
    if (pivot_label) rep["pivot"] = *pivot_label;

    Json order = Json::array();
    Json scores = Json::array();
    for (std::size_t idx : ranking.order) {
        order.push_back(matrix.node_ids()[idx]);
        scores.push_back(ranking.scores[idx]);
    }
    rep["order"] = std::move(order);
    rep["scores"] = std::move(scores);
    rep["comparison_count"] = ranking.comparison_count;
    rep["utility_evaluation_count"] = ranking.utility_evaluation_count;
    rep["cycle_detected"] = ranking.cycle_detected;

    Json ties = Json::array();
    for (const auto& group : ranking.tie_groups) {
        Json g = Json::array();
        for (std::size_t idx : group) g.push_back(matrix.node_ids()[idx]);
        ties.push_back(std::move(g));
    }
    rep["tie_groups"] = std::move(ties);

    if (tree) {
        Json layers = Json::array();
        for (const auto& layer : tree->layer_values()) layers.push_back(layer);
        rep["tree"] = Json{{"layers", std::move(layers)}};
    }
    return rep;
}

Json tree_report(const TreeMetrics& m) {
    Json rep;
    rep["m"] = m.m;
    rep["layers"] = m.layers;
    rep["divisions"] = m.divisions;
    rep["comparisons"] = m.comparisons;
    rep["lower_bound"] = m.lower_bound;
    rep["upper_bound"] = m.upper_bound;
    rep["final_layer_sum"] = m.final_layer_sum;
    rep["final_layer_node_count"] = m.final_layer_node_count;
    rep["optimal_split"] = Json::array({m.optimal_split.first, m.optimal_split.second});
    rep["fault_tolerance"] = m.fault_tolerance;
    rep["whole_tree_fault_tolerance"] = m.whole_tree_fault_tolerance;
    rep["max_fault_tolerance_node"] = m.max_fault_tolerance_node;
    rep["probability_optimal"] = m.probability_optimal;
    return rep;
}

std::string report_to_string(const Json& report) { return report.dump(2) + "\n"; }

void write_report(const std::filesystem::path& path, const Json& report) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path.string() + "'");
    out << report_to_string(report);
}

Json read_report(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
    return Json::parse(in);
}

}  // namespace pmadm
