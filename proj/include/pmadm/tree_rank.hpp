#pragma once

#include "pmadm/decision.hpp"
#include "pmadm/pairwise.hpp"
#include "pmadm/tree_analysis.hpp"

#include <cstdint>
#include <string>

namespace pmadm {

struct PivotStrategy {
    enum class Kind { random, madm_presequence, avg_order_presequence, oracle_median };

    Kind kind = Kind::madm_presequence;
    std::uint64_t seed = 0;  // used by Kind::random only

    static PivotStrategy random(std::uint64_t seed) { return {Kind::random, seed}; }
    static PivotStrategy madm() { return {Kind::madm_presequence, 0}; }
    static PivotStrategy avg_order() { return {Kind::avg_order_presequence, 0}; }
    // Pivots on the true median of each subset (obtained from a full
    // round-robin ranked once up front). Exists so the comparison-count lower
    // bound can be exercised; the up-front ranking is not counted.
    static PivotStrategy oracle_median() { return {Kind::oracle_median, 0}; }

    std::string label() const;
};

// Per-attribute sequence positions (1 = best, ties share the mean rank) and
// their per-node average.
struct AvgOrderReport {
    std::vector<std::vector<double>> ranks;  // [attribute][node]
    std::vector<double> average;             // [node]
};

// Pre-sequencing by the plain weighted ranking.
std::vector<std::size_t> presequence_madm(const DecisionMatrix& matrix, NormScheme scheme);
std::vector<std::size_t> presequence_madm(const NormalizedMatrix& norm);

struct AvgOrderResult {
    AvgOrderReport report;
    std::vector<std::size_t> order;  // ascending average order, ties by index
};

// Pre-sequencing by average per-attribute sequence position.
AvgOrderResult presequence_avg_order(const DecisionMatrix& matrix, NormScheme scheme);
AvgOrderResult presequence_avg_order(const NormalizedMatrix& norm);

struct LpmadmResult {
    Ranking ranking;
    DecomposingTree tree;
};

// Quicksort-style ranking: pick a pivot per strategy, compare it against the
// rest of the subset, partition, recurse. A node that ties the pivot goes to
// the loser side.
LpmadmResult lpmadm_rank(const DecisionMatrix& matrix, NormScheme scheme,
                         const PivotStrategy& strategy);
LpmadmResult lpmadm_rank(const NormalizedMatrix& norm, const PivotStrategy& strategy);

}  // namespace pmadm
