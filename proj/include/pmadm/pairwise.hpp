#pragma once

#include "pmadm/decision.hpp"

#include <array>
#include <optional>

namespace pmadm {

enum class Verdict { a_wins, b_wins, tie };

// Result of comparing two nodes with weights derived from their rows alone.
struct PairwiseOutcome {
    std::size_t a = 0, b = 0;
    std::vector<double> weights;  // pair weights, sum 1
    double utility_a = 0.0;
    double utility_b = 0.0;
    double delta = 0.0;           // utility_a - utility_b
    Verdict verdict = Verdict::tie;
};

// w_i = d_i^2 / sum_k d_k^2 with d = row_a - row_b; uniform when the rows are
// identical (the tie case, where the weights are unused anyway).
std::vector<double> pair_weights(std::span<const double> row_a, std::span<const double> row_b);

PairwiseOutcome pair_utilities(std::span<const double> row_a, std::span<const double> row_b);

// m x m grid of pairwise variances (d^2/4) of one attribute column.
struct VarianceMatrix {
    std::size_t size = 0;
    std::vector<double> values;  // row-major, symmetric, zero diagonal
    double at(std::size_t a, std::size_t b) const { return values[a * size + b]; }
};
VarianceMatrix variance_matrix(const NormalizedMatrix& norm, std::size_t attribute);

// Above this node count pmadm_rank stops scanning all triples for cycles and
// falls back to the win-count profile check.
inline constexpr std::size_t kDefaultCycleScanCap = 64;

// Full round-robin result. Keeps the normalized rows, the frozen
// normalization constants and all pairwise outcomes so single-node updates
// can reuse everything untouched.
struct PmadmResult {
    Ranking ranking;
    NormalizedMatrix normalized;
    NormalizationModel model;
    std::vector<PairwiseOutcome> outcomes;  // pairs (a, b) with a < b, lexicographic
    bool clamped = false;                   // set by update_node when the new row left the frozen domain

    const PairwiseOutcome& outcome(std::size_t a, std::size_t b) const;
};

PmadmResult pmadm_rank(const DecisionMatrix& matrix, NormScheme scheme,
                       std::size_t cycle_scan_cap = kDefaultCycleScanCap);
PmadmResult pmadm_rank(NormalizedMatrix norm, NormalizationModel model,
                       std::size_t cycle_scan_cap = kDefaultCycleScanCap);

// First intransitive triple (a beats b, b beats c, c beats a) over all
// node triples in lexicographic order, or nullopt. Exhaustive.
std::optional<std::array<std::size_t, 3>> find_cycle(const DecisionMatrix& matrix,
                                                     NormScheme scheme);
std::optional<std::array<std::size_t, 3>> find_cycle(const NormalizedMatrix& norm);

// Replaces one node's raw row under the frozen normalization constants and
// recomputes only the outcomes involving that node; everything else is reused
// bit-identically. comparison_count of the result is m-1.
PmadmResult update_node(const PmadmResult& previous, std::size_t node,
                        std::span<const double> new_raw_row);

}  // namespace pmadm
