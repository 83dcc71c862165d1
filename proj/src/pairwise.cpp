#include "pmadm/pairwise.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmadm {

namespace {

std::size_t pair_index(std::size_t m, std::size_t a, std::size_t b) {
    // index of (a, b), a < b, in lexicographic pair order
    return a * m - a * (a + 1) / 2 + (b - a - 1);
}

// Does node x win outcome o?
bool beats(const PairwiseOutcome& o, std::size_t x) {
    if (o.verdict == Verdict::tie) return false;
    return o.verdict == Verdict::a_wins ? o.a == x : o.b == x;
}

// Exhaustive scan over all triples; returns the first directed 3-cycle.
std::optional<std::array<std::size_t, 3>> scan_triples(const std::vector<PairwiseOutcome>& outcomes,
                                                       std::size_t m) {
    for (std::size_t a = 0; a + 2 < m; ++a) {
        for (std::size_t b = a + 1; b + 1 < m; ++b) {
            const PairwiseOutcome& ab = outcomes[pair_index(m, a, b)];
            for (std::size_t c = b + 1; c < m; ++c) {
                const PairwiseOutcome& bc = outcomes[pair_index(m, b, c)];
                const PairwiseOutcome& ac = outcomes[pair_index(m, a, c)];
                if (beats(ab, a) && beats(bc, b) && beats(ac, c))
                    return std::array<std::size_t, 3>{a, b, c};
                if (beats(ac, a) && beats(bc, c) && beats(ab, b))
                    return std::array<std::size_t, 3>{a, c, b};
            }
        }
    }
    return std::nullopt;
}

// A transitive round-robin (ties only between identical rows) produces win
// counts where each equal-score group of size s with k nodes above it scores
// exactly m - k - s. Any other profile means some triple is intransitive.
bool score_profile_consistent(const std::vector<double>& scores,
                              const std::vector<std::size_t>& order) {
    const std::size_t m = order.size();
    std::size_t start = 0;
    while (start < m) {
        std::size_t end = start;
        while (end < m && scores[order[end]] == scores[order[start]]) ++end;
        const double expected = static_cast<double>(m - start - (end - start));
        if (scores[order[start]] != expected) return false;
        start = end;
    }
    return true;
}

std::vector<PairwiseOutcome> all_outcomes(const NormalizedMatrix& norm, std::uint64_t& comparisons) {
    const std::size_t m = norm.rows;
    std::vector<PairwiseOutcome> outcomes;
    outcomes.reserve(m * (m - 1) / 2);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            PairwiseOutcome o = pair_utilities(norm.row(a), norm.row(b));
            o.a = a;
            o.b = b;
            outcomes.push_back(std::move(o));
            ++comparisons;
        }
    }
    return outcomes;
}

Ranking ranking_from_outcomes(const std::vector<PairwiseOutcome>& outcomes, std::size_t m,
                              std::size_t cycle_scan_cap) {
    Ranking r;
    r.algorithm = Algorithm::pmadm;
    r.scores.assign(m, 0.0);
    for (const PairwiseOutcome& o : outcomes) {
        if (o.verdict == Verdict::a_wins) r.scores[o.a] += 1.0;
        if (o.verdict == Verdict::b_wins) r.scores[o.b] += 1.0;
    }
    order_by_score_desc(r.scores, r.order, r.tie_groups);
    if (m <= cycle_scan_cap)
        r.cycle_detected = scan_triples(outcomes, m).has_value();
    else
        r.cycle_detected = !score_profile_consistent(r.scores, r.order);
    return r;
}

}  // namespace

std::vector<double> pair_weights(std::span<const double> row_a, std::span<const double> row_b) {
    if (row_a.size() != row_b.size() || row_a.empty())
        throw std::invalid_argument("pair_weights: rows must have equal, non-zero length");
    const std::size_t n = row_a.size();
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = row_a[i] - row_b[i];
        w[i] = d * d;
        total += w[i];
    }
    if (total == 0.0) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(n));
    } else {
        for (double& x : w) x /= total;
    }
    return w;
}

PairwiseOutcome pair_utilities(std::span<const double> row_a, std::span<const double> row_b) {
    PairwiseOutcome o;
    o.weights = pair_weights(row_a, row_b);
    for (std::size_t i = 0; i < o.weights.size(); ++i) {
        o.utility_a += o.weights[i] * row_a[i];
        o.utility_b += o.weights[i] * row_b[i];
    }
    o.delta = o.utility_a - o.utility_b;

    const bool identical = std::equal(row_a.begin(), row_a.end(), row_b.begin());
    if (identical) {
        o.verdict = Verdict::tie;
        o.delta = 0.0;
    } else if (o.delta > 0.0) {
        o.verdict = Verdict::a_wins;
    } else if (o.delta < 0.0) {
        o.verdict = Verdict::b_wins;
    } else {
        // delta can vanish for distinct rows (e.g. d = (x, -x)). Ties are
        // reserved for identical rows, so resolve by row comparison; this
        // stays antisymmetric under argument swap.
        o.verdict = std::lexicographical_compare(row_b.begin(), row_b.end(), row_a.begin(),
                                                 row_a.end())
                        ? Verdict::a_wins
                        : Verdict::b_wins;
    }
    return o;
}

VarianceMatrix variance_matrix(const NormalizedMatrix& norm, std::size_t attribute) {
    if (attribute >= norm.cols)
        throw std::invalid_argument("variance_matrix: attribute index out of range");
    VarianceMatrix vm;
    vm.size = norm.rows;
    vm.values.assign(norm.rows * norm.rows, 0.0);
    for (std::size_t a = 0; a < norm.rows; ++a) {
        for (std::size_t b = a + 1; b < norm.rows; ++b) {
            const double d = norm.at(a, attribute) - norm.at(b, attribute);
            const double v = d * d / 4.0;
            vm.values[a * vm.size + b] = v;
            vm.values[b * vm.size + a] = v;
        }
    }
    return vm;
}

const PairwiseOutcome& PmadmResult::outcome(std::size_t a, std::size_t b) const {
    if (a == b || a >= normalized.rows || b >= normalized.rows)
        throw std::invalid_argument("outcome: bad pair");
    if (a > b) std::swap(a, b);
    return outcomes[pair_index(normalized.rows, a, b)];
}

PmadmResult pmadm_rank(NormalizedMatrix norm, NormalizationModel model,
                       std::size_t cycle_scan_cap) {
    PmadmResult res;
    std::uint64_t comparisons = 0;
    res.outcomes = all_outcomes(norm, comparisons);
    res.ranking = ranking_from_outcomes(res.outcomes, norm.rows, cycle_scan_cap);
    res.ranking.comparison_count = comparisons;
    res.ranking.utility_evaluation_count = 2 * comparisons;
    res.normalized = std::move(norm);
    res.model = std::move(model);
    return res;
}

PmadmResult pmadm_rank(const DecisionMatrix& matrix, NormScheme scheme,
                       std::size_t cycle_scan_cap) {
    return pmadm_rank(normalize(matrix, scheme), normalization_model(matrix, scheme),
                      cycle_scan_cap);
}

std::optional<std::array<std::size_t, 3>> find_cycle(const NormalizedMatrix& norm) {
    if (norm.rows < 3) return std::nullopt;
    std::uint64_t comparisons = 0;
    const std::vector<PairwiseOutcome> outcomes = all_outcomes(norm, comparisons);
    return scan_triples(outcomes, norm.rows);
}

std::optional<std::array<std::size_t, 3>> find_cycle(const DecisionMatrix& matrix,
                                                     NormScheme scheme) {
    return find_cycle(normalize(matrix, scheme));
}

PmadmResult update_node(const PmadmResult& previous, std::size_t node,
                        std::span<const double> new_raw_row) {
    const std::size_t m = previous.normalized.rows;
    if (node >= m) throw std::invalid_argument("update_node: unknown node");
    if (new_raw_row.size() != previous.normalized.cols)
        throw std::invalid_argument("update_node: row length mismatch");

    PmadmResult res = previous;
    bool clamped = false;
    const std::vector<double> row = res.model.apply(new_raw_row, &clamped);
    res.clamped = clamped;
    std::copy(row.begin(), row.end(), res.normalized.values.begin() + node * res.normalized.cols);

    std::uint64_t comparisons = 0;
    for (std::size_t other = 0; other < m; ++other) {
        if (other == node) continue;
        const std::size_t a = std::min(node, other);
        const std::size_t b = std::max(node, other);
        PairwiseOutcome o = pair_utilities(res.normalized.row(a), res.normalized.row(b));
        o.a = a;
        o.b = b;
        res.outcomes[pair_index(m, a, b)] = std::move(o);
        ++comparisons;
    }

    res.ranking = ranking_from_outcomes(res.outcomes, m, kDefaultCycleScanCap);
    res.ranking.comparison_count = comparisons;
    res.ranking.utility_evaluation_count = 2 * comparisons;
    return res;
}

}  // namespace pmadm
