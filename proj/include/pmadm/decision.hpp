#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pmadm {

enum class Direction { benefit, cost };

// max:     benefit v/max, cost min/v; constant columns map to 1.
// min_max: benefit (v-min)/(max-min), cost (max-v)/(max-min); constant columns map to 0.
enum class NormScheme { max, min_max };

struct AttributeSpec {
    std::string name;
    Direction direction = Direction::benefit;
};

// m candidate nodes x n attributes of raw, finite values (row per node).
// Construction validates: m,n >= 1, unique ids and attribute names, finite values.
class DecisionMatrix {
public:
    DecisionMatrix(std::vector<std::string> node_ids,
                   std::vector<AttributeSpec> attributes,
                   std::vector<double> values);  // row-major m*n

    // Generated ids n1..nm / names p1..pn, all benefit.
    static DecisionMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t node_count() const { return ids_.size(); }
    std::size_t attribute_count() const { return attrs_.size(); }
    const std::vector<std::string>& node_ids() const { return ids_; }
    const std::vector<AttributeSpec>& attributes() const { return attrs_; }

    double value(std::size_t node, std::size_t attr) const {
        return values_[node * attrs_.size() + attr];
    }
    std::span<const double> row(std::size_t node) const {
        return {values_.data() + node * attrs_.size(), attrs_.size()};
    }

    // Copy with one node's raw row replaced (the row is validated).
    DecisionMatrix with_row(std::size_t node, std::span<const double> raw) const;

private:
    std::vector<std::string> ids_;
    std::vector<AttributeSpec> attrs_;
    std::vector<double> values_;
};

// Per-column constants captured when a matrix is normalized, so later row
// updates can be mapped into the same [0,1] frame without recomputing the
// column statistics.
struct NormalizationModel {
    struct Column {
        Direction direction = Direction::benefit;
        double col_min = 0.0;
        double col_max = 0.0;
        bool constant = false;
    };
    NormScheme scheme = NormScheme::max;
    std::vector<Column> columns;

    // Maps a raw row into [0,1] under the frozen constants. Values outside the
    // frozen domain are clamped; *clamped is set when any clamping happened.
    std::vector<double> apply(std::span<const double> raw, bool* clamped = nullptr) const;
};

struct NormalizedMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major, all in [0,1]

    double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * cols, cols};
    }
};

// Throws std::invalid_argument for degenerate input: under max, negative
// values anywhere or a cost column containing zero.
NormalizedMatrix normalize(const DecisionMatrix& matrix, NormScheme scheme);
NormalizationModel normalization_model(const DecisionMatrix& matrix, NormScheme scheme);

// Population variance per attribute column (divisor m).
std::vector<double> variances(const NormalizedMatrix& norm);

// Variance-proportional weights, summing to 1. All-zero variances fall back
// to uniform weights so the ranking degenerates into a pure index tie.
std::vector<double> weights(std::span<const double> variance_report);

// U_j = sum_i w_i * norm(j, i)
std::vector<double> madm_utilities(const NormalizedMatrix& norm, std::span<const double> w);

enum class Algorithm { madm, pmadm, lpmadm };

// A total order over node indices, best first. Ties are broken by ascending
// original index in every ranking operation so cross-algorithm comparisons
// are well defined.
struct Ranking {
    Algorithm algorithm = Algorithm::madm;
    std::vector<std::size_t> order;   // node indices, best first
    std::vector<double> scores;       // per node: utility (madm), win count (pmadm),
                                      // or sequence score m-1-position (lpmadm)
    std::uint64_t comparison_count = 0;
    std::uint64_t utility_evaluation_count = 0;
    bool cycle_detected = false;
    std::vector<std::vector<std::size_t>> tie_groups;  // groups of >= 2 nodes sharing a score
};

Ranking madm_rank(const DecisionMatrix& matrix, NormScheme scheme);
Ranking madm_rank(const NormalizedMatrix& norm);

// Shared ordering rule: descending score, ties by ascending index.
void order_by_score_desc(std::span<const double> scores,
                         std::vector<std::size_t>& order,
                         std::vector<std::vector<std::size_t>>& tie_groups);

}  // namespace pmadm
