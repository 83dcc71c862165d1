#include "pmadm/tree_analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pmadm {

namespace {

unsigned floor_log2(std::uint64_t v) {
    return static_cast<unsigned>(std::bit_width(v)) - 1;
}

std::uint64_t pow2(unsigned k) { return std::uint64_t{1} << k; }

// Depth of the balanced subtree rooted at value v.
unsigned subtree_depth(std::uint64_t v) { return v < 2 ? 0 : floor_log2(v); }

// Final-layer value sum of the balanced subtree rooted at v, extended to the
// terminal values so split sides of 0 or 1 are handled uniformly.
std::uint64_t eps_of(std::uint64_t v) { return v < 2 ? v : v - pow2(floor_log2(v)) + 1; }

std::vector<std::uint64_t> min_cost_table(std::uint64_t m) {
    std::vector<std::uint64_t> c(m + 1, 0);
    for (std::uint64_t v = 2; v <= m; ++v) {
        std::uint64_t best = UINT64_MAX;
        for (std::uint64_t a = 0; a <= (v - 1) / 2; ++a)
            best = std::min(best, c[a] + c[v - 1 - a]);
        c[v] = v - 1 + best;
    }
    return c;
}

std::vector<std::uint64_t> max_cost_table(std::uint64_t m) {
    std::vector<std::uint64_t> c(m + 1, 0);
    for (std::uint64_t v = 2; v <= m; ++v) {
        std::uint64_t worst = 0;
        for (std::uint64_t a = 0; a <= (v - 1) / 2; ++a)
            worst = std::max(worst, c[a] + c[v - 1 - a]);
        c[v] = v - 1 + worst;
    }
    return c;
}

std::pair<std::uint64_t, std::uint64_t> balanced_split(std::uint64_t v) {
    return {(v - 1 + 1) / 2, (v - 1) / 2};  // (ceil, floor) of (v-1)/2
}

}  // namespace

DecomposingTree::DecomposingTree(std::uint64_t root_value) {
    nodes_.push_back({root_value, 0, -1, -1, -1});
}

std::pair<int, int> DecomposingTree::split(int parent, std::uint64_t left_value,
                                           std::uint64_t right_value) {
    Node& p = nodes_.at(static_cast<std::size_t>(parent));
    if (p.is_split()) throw std::invalid_argument("split: node already split");
    if (p.value < 2) throw std::invalid_argument("split: terminal node");
    if (left_value + right_value + 1 != p.value)
        throw std::invalid_argument("split: children must sum to parent value - 1");

    const std::size_t layer = p.layer + 1;
    const int li = static_cast<int>(nodes_.size());
    const int ri = li + 1;
    p.left = li;
    p.right = ri;
    nodes_.push_back({left_value, layer, parent, -1, -1});
    nodes_.push_back({right_value, layer, parent, -1, -1});
    deepest_ = std::max(deepest_, layer);
    return {li, ri};
}

std::vector<std::vector<std::uint64_t>> DecomposingTree::layer_values() const {
    std::vector<std::vector<std::uint64_t>> layers(deepest_ + 1);
    for (const Node& n : nodes_) layers[n.layer].push_back(n.value);
    return layers;
}

DecomposingTree optimal_tree(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("optimal_tree: m must be >= 1");
    DecomposingTree tree(m);
    // Iterative worklist; nodes are appended in order, so scanning by index
    // visits every node exactly once.
    for (int i = 0; i < static_cast<int>(tree.nodes().size()); ++i) {
        const std::uint64_t v = tree.node(i).value;
        if (v >= 2) {
            const auto [l, r] = balanced_split(v);
            tree.split(i, l, r);
        }
    }
    return tree;
}

LayersDivisions layers_and_divisions(const DecomposingTree& tree) {
    LayersDivisions out;
    out.layers = tree.layer_count();
    for (const auto& n : tree.nodes())
        if (n.is_split()) ++out.divisions;
    return out;
}

std::uint64_t comparison_cost(const DecomposingTree& tree) {
    std::uint64_t total = 0;
    for (const auto& n : tree.nodes())
        if (n.layer > 0) total += n.value;
    return total;
}

std::uint64_t optimal_comparison_count(std::uint64_t m) {
    if (m < 2) return 0;
    const unsigned l = floor_log2(m);
    return static_cast<std::uint64_t>(l) * (m + 1) - pow2(l + 1) + 2;
}

std::uint64_t worst_comparison_count(std::uint64_t m) {
    return m < 2 ? 0 : m * (m - 1) / 2;
}

std::pair<std::uint64_t, std::uint64_t> comparison_bounds(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("comparison_bounds: m must be >= 2");
    return {optimal_comparison_count(m), worst_comparison_count(m)};
}

std::uint64_t final_layer_sum(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("final_layer_sum: m must be >= 2");
    return m - pow2(floor_log2(m)) + 1;
}

std::uint64_t final_layer_node_count(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("final_layer_node_count: m must be >= 2");
    const DecomposingTree tree = optimal_tree(m);
    std::uint64_t count = 0;
    for (const auto& n : tree.nodes())
        if (n.layer == tree.layer_count()) ++count;
    return count;
}

std::uint64_t fault_tolerance(std::uint64_t n1, std::uint64_t n2) {
    if (n1 == 0 || n2 == 0) return 1;
    if (subtree_depth(n1) != subtree_depth(n2)) return 1;
    const std::uint64_t e1 = eps_of(n1);
    const std::uint64_t e2 = eps_of(n2);
    const std::uint64_t eps_max = std::max(e1, e2);
    const std::uint64_t eps_min = std::min(e1, e2);
    const std::uint64_t n_max = std::max(n1, n2);
    const std::uint64_t capacity = pow2(floor_log2(n_max)) - eps_min;
    return std::min(eps_max, capacity) + 1;
}

std::uint64_t max_fault_tolerance_node(unsigned range_exponent) {
    if (range_exponent < 1)
        throw std::invalid_argument("max_fault_tolerance_node: range exponent must be >= 1");
    const std::uint64_t tau = 3 * pow2(range_exponent - 1);
    return tau % 2 == 1 ? tau : tau - 1;
}

std::uint64_t tree_fault_tolerance(const DecomposingTree& tree) {
    if (tree.layer_count() == 0) return 1;
    std::vector<std::uint64_t> layer_sum(tree.layer_count() + 1, 0);
    for (const auto& n : tree.nodes()) {
        if (!n.is_split()) continue;
        const std::uint64_t left = tree.node(n.left).value;
        const std::uint64_t right = tree.node(n.right).value;
        layer_sum[n.layer + 1] += fault_tolerance(left, right);
    }
    std::uint64_t product = 1;
    for (std::size_t i = 1; i < layer_sum.size(); ++i)
        if (layer_sum[i] > 0) product *= layer_sum[i];
    return product;
}

double probability_optimal(std::uint64_t m, std::pair<std::uint64_t, std::uint64_t> split) {
    if (m < 2) throw std::invalid_argument("probability_optimal: m must be >= 2");
    const auto [n1, n2] = split;
    if (n1 + n2 + 1 != m)
        throw std::invalid_argument("probability_optimal: split sides must sum to m - 1");
    const double pairs = static_cast<double>(m / 2);
    const bool same_range = n1 > 0 && n2 > 0 && subtree_depth(n1) == subtree_depth(n2);
    const std::uint64_t count = same_range ? fault_tolerance(n1, n2) : 1;
    return static_cast<double>(count) / pairs;
}

EnumerationReport enumerate_decompositions(std::uint64_t m, std::uint64_t cap) {
    if (m < 2) throw std::invalid_argument("enumerate_decompositions: m must be >= 2");
    if (m > cap)
        throw std::invalid_argument("enumerate_decompositions: m exceeds the cap of " +
                                    std::to_string(cap));

    EnumerationReport rep;
    rep.m = m;
    const std::vector<std::uint64_t> cmin = min_cost_table(m);
    const std::vector<std::uint64_t> cmax = max_cost_table(m);
    rep.min_comparisons = cmin[m];
    rep.max_comparisons = cmax[m];

    for (std::uint64_t a = 0; a <= (m - 1) / 2; ++a) {
        const std::uint64_t b = m - 1 - a;
        rep.splits.push_back({a, b, m - 1 + cmin[a] + cmin[b]});
        if (rep.splits.back().min_total == rep.min_comparisons) ++rep.optimal_split_count;
    }

    if (m <= 16) {
        // Cost polynomial per value: cost -> number of decomposition trees,
        // built by convolving the children's polynomials over ordered splits.
        std::vector<std::map<std::uint64_t, std::uint64_t>> dist(m + 1);
        dist[0][0] = 1;
        dist[1][0] = 1;
        for (std::uint64_t v = 2; v <= m; ++v) {
            for (std::uint64_t a = 0; a <= v - 1; ++a) {
                for (const auto& [ca, na] : dist[a])
                    for (const auto& [cb, nb] : dist[v - 1 - a])
                        dist[v][v - 1 + ca + cb] += na * nb;
            }
        }
        rep.cost_distribution = std::move(dist[m]);
    }
    return rep;
}

std::vector<FaultToleranceDiscrepancy> fault_tolerance_survey(std::uint64_t m_max) {
    std::vector<FaultToleranceDiscrepancy> records;
    for (std::uint64_t m = 2; m <= m_max; ++m) {
        const auto [n1, n2] = balanced_split(m);
        if (n1 == 0 || n2 == 0 || subtree_depth(n1) != subtree_depth(n2))
            continue;  // the formula's equal-depth precondition fails
        const EnumerationReport rep = enumerate_decompositions(m, m_max);
        const std::uint64_t formula = fault_tolerance(n1, n2);
        if (formula != rep.optimal_split_count)
            records.push_back({m, n1, n2, formula, rep.optimal_split_count});
    }
    return records;
}

TreeMetrics analyze_tree(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("analyze_tree: m must be >= 2");
    const DecomposingTree tree = optimal_tree(m);
    const LayersDivisions ld = layers_and_divisions(tree);

    TreeMetrics t;
    t.m = m;
    t.layers = ld.layers;
    t.divisions = ld.divisions;
    t.comparisons = comparison_cost(tree);
    std::tie(t.lower_bound, t.upper_bound) = comparison_bounds(m);
    t.final_layer_sum = final_layer_sum(m);
    t.final_layer_node_count = final_layer_node_count(m);
    t.optimal_split = balanced_split(m);
    t.fault_tolerance = fault_tolerance(t.optimal_split.first, t.optimal_split.second);
    t.whole_tree_fault_tolerance = tree_fault_tolerance(tree);
    t.max_fault_tolerance_node = max_fault_tolerance_node(floor_log2(m));
    t.probability_optimal = probability_optimal(m, t.optimal_split);
    return t;
}

}  // namespace pmadm
