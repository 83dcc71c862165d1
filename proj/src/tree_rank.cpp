#include "pmadm/tree_rank.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pmadm {

std::string PivotStrategy::label() const {
    switch (kind) {
        case Kind::random: return "random:" + std::to_string(seed);
        case Kind::madm_presequence: return "madm";
        case Kind::avg_order_presequence: return "avg-order";
        case Kind::oracle_median: return "oracle-median";
    }
    return "?";
}

std::vector<std::size_t> presequence_madm(const NormalizedMatrix& norm) {
    return madm_rank(norm).order;
}

std::vector<std::size_t> presequence_madm(const DecisionMatrix& matrix, NormScheme scheme) {
    return presequence_madm(normalize(matrix, scheme));
}

AvgOrderResult presequence_avg_order(const NormalizedMatrix& norm) {
    const std::size_t m = norm.rows;
    AvgOrderResult res;
    res.report.ranks.assign(norm.cols, std::vector<double>(m, 0.0));
    res.report.average.assign(m, 0.0);

    for (std::size_t j = 0; j < norm.cols; ++j) {
        // Descending sequence position, 1 = best; equal values share the mean
        // of the positions they occupy.
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t better = 0, equal = 0;
            for (std::size_t k = 0; k < m; ++k) {
                if (k == i) continue;
                if (norm.at(k, j) > norm.at(i, j)) ++better;
                if (norm.at(k, j) == norm.at(i, j)) ++equal;
            }
            const double rank = 1.0 + static_cast<double>(better) + static_cast<double>(equal) / 2.0;
            res.report.ranks[j][i] = rank;
            res.report.average[i] += rank;
        }
    }
    for (double& a : res.report.average) a /= static_cast<double>(norm.cols);

    res.order.resize(m);
    for (std::size_t i = 0; i < m; ++i) res.order[i] = i;
    std::sort(res.order.begin(), res.order.end(), [&](std::size_t a, std::size_t b) {
        if (res.report.average[a] != res.report.average[b])
            return res.report.average[a] < res.report.average[b];
        return a < b;
    });
    return res;
}

AvgOrderResult presequence_avg_order(const DecisionMatrix& matrix, NormScheme scheme) {
    return presequence_avg_order(normalize(matrix, scheme));
}

namespace {

struct RankContext {
    const NormalizedMatrix& norm;
    const PivotStrategy& strategy;
    std::vector<std::size_t> position;  // node -> pre-sequence position, 0 = best
    std::mt19937_64 rng;
    std::uint64_t comparisons = 0;
    DecomposingTree tree;
};

// Pivot = the subset member sitting at the lower-middle pre-sequence position
// of the current subset (index floor(s/2) counted best-first).
std::size_t pick_pivot(RankContext& ctx, std::vector<std::size_t>& subset) {
    if (ctx.strategy.kind == PivotStrategy::Kind::random) {
        std::uniform_int_distribution<std::size_t> pick(0, subset.size() - 1);
        return subset[pick(ctx.rng)];
    }
    const std::size_t middle = subset.size() / 2;
    std::nth_element(subset.begin(), subset.begin() + middle, subset.end(),
                     [&](std::size_t a, std::size_t b) {
                         return ctx.position[a] < ctx.position[b];
                     });
    return subset[middle];
}

// Returns the subset ranked worst-first; records the split in the tree.
std::vector<std::size_t> rank_subset(RankContext& ctx, std::vector<std::size_t> subset,
                                     int tree_node) {
    if (subset.size() <= 1) return subset;

    const std::size_t pivot = pick_pivot(ctx, subset);
    std::vector<std::size_t> losers, winners;
    for (std::size_t x : subset) {
        if (x == pivot) continue;
        const PairwiseOutcome o = pair_utilities(ctx.norm.row(pivot), ctx.norm.row(x));
        ++ctx.comparisons;
        if (o.verdict == Verdict::b_wins)
            winners.push_back(x);
        else
            losers.push_back(x);  // pivot wins and exact ties both land here
    }

    const auto [left, right] = ctx.tree.split(tree_node, losers.size(), winners.size());
    std::vector<std::size_t> ordered = rank_subset(ctx, std::move(losers), left);
    ordered.push_back(pivot);
    std::vector<std::size_t> upper = rank_subset(ctx, std::move(winners), right);
    ordered.insert(ordered.end(), upper.begin(), upper.end());
    return ordered;
}

}  // namespace

LpmadmResult lpmadm_rank(const NormalizedMatrix& norm, const PivotStrategy& strategy) {
    const std::size_t m = norm.rows;

    RankContext ctx{norm, strategy, {}, std::mt19937_64(strategy.seed), 0, DecomposingTree(m)};
    switch (strategy.kind) {
        case PivotStrategy::Kind::random:
            break;
        case PivotStrategy::Kind::madm_presequence: {
            const std::vector<std::size_t> order = presequence_madm(norm);
            ctx.position.assign(m, 0);
            for (std::size_t p = 0; p < m; ++p) ctx.position[order[p]] = p;
            break;
        }
        case PivotStrategy::Kind::avg_order_presequence: {
            const AvgOrderResult pre = presequence_avg_order(norm);
            ctx.position.assign(m, 0);
            for (std::size_t p = 0; p < m; ++p) ctx.position[pre.order[p]] = p;
            break;
        }
        case PivotStrategy::Kind::oracle_median: {
            const PmadmResult full = pmadm_rank(NormalizedMatrix(norm), NormalizationModel{}, 0);
            ctx.position.assign(m, 0);
            for (std::size_t p = 0; p < m; ++p) ctx.position[full.ranking.order[p]] = p;
            break;
        }
    }

    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    std::vector<std::size_t> worst_first = rank_subset(ctx, std::move(all), ctx.tree.root());

    LpmadmResult res{Ranking{}, std::move(ctx.tree)};
    res.ranking.algorithm = Algorithm::lpmadm;
    res.ranking.order.assign(worst_first.rbegin(), worst_first.rend());
    res.ranking.scores.assign(m, 0.0);
    for (std::size_t p = 0; p < m; ++p)
        res.ranking.scores[res.ranking.order[p]] = static_cast<double>(m - 1 - p);
    res.ranking.comparison_count = ctx.comparisons;
    res.ranking.utility_evaluation_count = 2 * ctx.comparisons;
    return res;
}

LpmadmResult lpmadm_rank(const DecisionMatrix& matrix, NormScheme scheme,
                         const PivotStrategy& strategy) {
    return lpmadm_rank(normalize(matrix, scheme), strategy);
}

}  // namespace pmadm
