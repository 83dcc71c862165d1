#pragma once

#include "pmadm/decision.hpp"
#include "pmadm/pairwise.hpp"

#include <optional>

namespace pmadm {

// First node pair ordered one way by the globally weighted utilities and the
// other way by the pairwise comparison, or nullopt if the two algorithms
// agree on every pair.
std::optional<std::pair<std::size_t, std::size_t>> divergence_witness(
    const DecisionMatrix& matrix, NormScheme scheme);

// Side-by-side utilities of one pair under global and pair weights.
// All values are in normalized units.
struct PairComparison {
    std::size_t i = 0, j = 0;
    double u_i = 0.0, u_j = 0.0;     // global-weight utilities
    double pu_i = 0.0, pu_j = 0.0;   // pair-weight utilities
    double du_i = 0.0, du_j = 0.0;   // pairwise minus global, per node
    double du_ij = 0.0;              // du_i - du_j
    // True iff the pairwise shift overcomes the global gap with opposite
    // sign, i.e. the two algorithms order (i, j) oppositely.
    bool threshold_satisfied = false;
};
PairComparison changing_threshold(const DecisionMatrix& matrix, NormScheme scheme,
                                  std::size_t i, std::size_t j);

// The change to node i's normalized attribute value that equalizes the pair
// (i, j), under four readings: closed forms at frozen weights, and
// self-consistent roots found by bisection (weights re-derived at every
// probe). Roots are searched inside the normalized domain only; absent
// entries mean no in-domain flip exists (or the frozen weight is zero, which
// leaves the closed form unbounded).
struct FlipThresholds {
    std::size_t i = 0, j = 0, attribute = 0;
    double weight_global = 0.0;  // the attribute's weight over all nodes
    double weight_pair = 0.0;    // its weight within the pair
    std::optional<double> madm_frozen;
    std::optional<double> pmadm_frozen;
    std::optional<double> madm_root;
    std::optional<double> pmadm_root;
};
FlipThresholds flip_thresholds(const DecisionMatrix& matrix, NormScheme scheme,
                               std::size_t i, std::size_t j, std::size_t attribute);

// Rank both ways, perturb one node's raw row under frozen normalization
// constants, rank again, and report what moved.
struct StabilityReport {
    std::size_t node = 0;
    bool clamped = false;
    // Pairwise outcomes among nodes other than `node` are the same doubles
    // before and after.
    bool pmadm_untouched_outcomes_identical = false;
    // The plain weighted ranking reordered at least one untouched pair.
    bool madm_untouched_order_changed = false;
    Ranking pmadm_before, pmadm_after;
    Ranking madm_before, madm_after;
};
StabilityReport stability_experiment(const DecisionMatrix& matrix, NormScheme scheme,
                                     std::size_t node, std::span<const double> new_raw_row);

}  // namespace pmadm
