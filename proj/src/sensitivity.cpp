#include "pmadm/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace pmadm {

namespace {

constexpr double kRootTolerance = 1e-12;  // bisection interval width

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int iter = 0; iter < 200 && hi - lo > kRootTolerance; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (sign_of(fm) == 0) return mid;
        if (sign_of(fm) == sign_of(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Smallest-|delta| root of f inside [lo, hi], scanning outward from 0 so the
// nearest sign change wins even when f is not monotone.
std::optional<double> nearest_root(const std::function<double(double)>& f, double lo, double hi) {
    constexpr int kSteps = 2048;
    if (sign_of(f(0.0)) == 0) return 0.0;

    std::optional<double> best;
    for (int side : {-1, +1}) {
        const double end = side < 0 ? lo : hi;
        if (side * end <= 0.0) continue;  // empty side
        double prev = 0.0;
        double fprev = f(0.0);
        bool found = false;
        for (int k = 1; k <= kSteps && !found; ++k) {
            const double x = end * static_cast<double>(k) / kSteps;
            const double fx = f(x);
            if (sign_of(fx) == 0 || sign_of(fx) != sign_of(fprev)) {
                const double root = side < 0 ? bisect(f, x, prev) : bisect(f, prev, x);
                if (!best || std::abs(root) < std::abs(*best)) best = root;
                found = true;
            }
            prev = x;
            fprev = fx;
        }
    }
    return best;
}

std::vector<double> global_weights(const NormalizedMatrix& norm) {
    return weights(variances(norm));
}

std::vector<std::size_t> order_without(const Ranking& r, std::size_t skip) {
    std::vector<std::size_t> out;
    out.reserve(r.order.size() - 1);
    for (std::size_t id : r.order)
        if (id != skip) out.push_back(id);
    return out;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> divergence_witness(
    const DecisionMatrix& matrix, NormScheme scheme) {
    const NormalizedMatrix norm = normalize(matrix, scheme);
    const std::vector<double> u = madm_utilities(norm, global_weights(norm));

    for (std::size_t i = 0; i < norm.rows; ++i) {
        for (std::size_t j = i + 1; j < norm.rows; ++j) {
            const PairwiseOutcome o = pair_utilities(norm.row(i), norm.row(j));
            const bool madm_i_wins = u[i] > u[j];
            const bool madm_j_wins = u[j] > u[i];
            if ((madm_i_wins && o.verdict == Verdict::b_wins) ||
                (madm_j_wins && o.verdict == Verdict::a_wins))
                return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

PairComparison changing_threshold(const DecisionMatrix& matrix, NormScheme scheme,
                                  std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("changing_threshold: need two distinct nodes");
    const NormalizedMatrix norm = normalize(matrix, scheme);
    if (i >= norm.rows || j >= norm.rows)
        throw std::invalid_argument("changing_threshold: node index out of range");

    const std::vector<double> u = madm_utilities(norm, global_weights(norm));
    const PairwiseOutcome o = pair_utilities(norm.row(i), norm.row(j));

    PairComparison c;
    c.i = i;
    c.j = j;
    c.u_i = u[i];
    c.u_j = u[j];
    c.pu_i = o.utility_a;
    c.pu_j = o.utility_b;
    c.du_i = c.pu_i - c.u_i;
    c.du_j = c.pu_j - c.u_j;
    c.du_ij = c.du_i - c.du_j;

    const double gap = c.u_i - c.u_j;
    c.threshold_satisfied =
        sign_of(c.du_ij) != 0 && sign_of(c.du_ij) == -sign_of(gap) && std::abs(c.du_ij) > std::abs(gap);
    return c;
}

FlipThresholds flip_thresholds(const DecisionMatrix& matrix, NormScheme scheme,
                               std::size_t i, std::size_t j, std::size_t attribute) {
    if (i == j) throw std::invalid_argument("flip_thresholds: need two distinct nodes");
    const NormalizedMatrix norm = normalize(matrix, scheme);
    if (i >= norm.rows || j >= norm.rows)
        throw std::invalid_argument("flip_thresholds: node index out of range");
    if (attribute >= norm.cols)
        throw std::invalid_argument("flip_thresholds: attribute index out of range");

    const std::vector<double> w = global_weights(norm);
    const std::vector<double> wp = pair_weights(norm.row(i), norm.row(j));

    FlipThresholds t;
    t.i = i;
    t.j = j;
    t.attribute = attribute;
    t.weight_global = w[attribute];
    t.weight_pair = wp[attribute];

    double gap_global = 0.0, gap_pair = 0.0;
    for (std::size_t k = 0; k < norm.cols; ++k) {
        const double d = norm.at(i, k) - norm.at(j, k);
        gap_global += w[k] * d;
        gap_pair += wp[k] * d;
    }
    if (t.weight_global > 0.0) t.madm_frozen = -gap_global / t.weight_global;
    if (t.weight_pair > 0.0) t.pmadm_frozen = -gap_pair / t.weight_pair;

    // Self-consistent roots: perturb node i's normalized value and rebuild
    // the weights at every probe. The search stays inside [0, 1].
    const double p = norm.at(i, attribute);
    const double lo = -p;
    const double hi = 1.0 - p;

    const auto perturbed = [&](double delta) {
        NormalizedMatrix changed = norm;
        changed.values[i * norm.cols + attribute] = p + delta;
        return changed;
    };
    t.madm_root = nearest_root(
        [&](double delta) {
            const NormalizedMatrix changed = perturbed(delta);
            const std::vector<double> u = madm_utilities(changed, global_weights(changed));
            return u[i] - u[j];
        },
        lo, hi);
    t.pmadm_root = nearest_root(
        [&](double delta) {
            const NormalizedMatrix changed = perturbed(delta);
            return pair_utilities(changed.row(i), changed.row(j)).delta;
        },
        lo, hi);
    return t;
}

StabilityReport stability_experiment(const DecisionMatrix& matrix, NormScheme scheme,
                                     std::size_t node, std::span<const double> new_raw_row) {
    if (node >= matrix.node_count())
        throw std::invalid_argument("stability_experiment: unknown node");

    const PmadmResult before = pmadm_rank(matrix, scheme);

    StabilityReport rep;
    rep.node = node;
    rep.pmadm_before = before.ranking;
    rep.madm_before = madm_rank(before.normalized);

    NormalizedMatrix after_norm = before.normalized;
    const std::vector<double> row = before.model.apply(new_raw_row, &rep.clamped);
    std::copy(row.begin(), row.end(), after_norm.values.begin() + node * after_norm.cols);

    const PmadmResult after = pmadm_rank(std::move(after_norm), before.model);
    rep.pmadm_after = after.ranking;
    rep.madm_after = madm_rank(after.normalized);

    rep.pmadm_untouched_outcomes_identical = true;
    const std::size_t m = matrix.node_count();
    for (std::size_t a = 0; a < m && rep.pmadm_untouched_outcomes_identical; ++a) {
        if (a == node) continue;
        for (std::size_t b = a + 1; b < m; ++b) {
            if (b == node) continue;
            const PairwiseOutcome& x = before.outcome(a, b);
            const PairwiseOutcome& y = after.outcome(a, b);
            if (x.delta != y.delta || x.utility_a != y.utility_a ||
                x.utility_b != y.utility_b || x.verdict != y.verdict ||
                x.weights != y.weights) {
                rep.pmadm_untouched_outcomes_identical = false;
                break;
            }
        }
    }

    rep.madm_untouched_order_changed =
        order_without(rep.madm_before, node) != order_without(rep.madm_after, node);
    return rep;
}

}  // namespace pmadm
