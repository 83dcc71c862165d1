#include "pmadm/tree_analysis.hpp"

#include <bit>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"

using namespace pmadm;

namespace {

// Worst case: the pivot is always extreme, one side stays empty.
DecomposingTree chain_tree(std::uint64_t m) {
    DecomposingTree tree(m);
    int node = tree.root();
    while (tree.node(node).value >= 2) {
        const auto [left, right] = tree.split(node, tree.node(node).value - 1, 0);
        (void)right;
        node = left;
    }
    return tree;
}

std::uint64_t catalan(std::uint64_t n) {
    std::uint64_t c = 1;
    for (std::uint64_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

}  // namespace

TEST_CASE("tree construction enforces the decomposition rule") {
    DecomposingTree tree(5);
    CHECK_THROWS_AS(tree.split(tree.root(), 2, 3), std::invalid_argument);  // sum must be 4
    const auto [left, right] = tree.split(tree.root(), 2, 2);
    CHECK_THROWS_AS(tree.split(tree.root(), 2, 2), std::invalid_argument);  // already split
    tree.split(left, 1, 0);
    CHECK_THROWS_AS(tree.split(tree.node(right).left, 0, 0), std::invalid_argument);
    (void)right;
}

TEST_CASE("optimal tree: smallest cases") {
    const DecomposingTree two = optimal_tree(2);
    CHECK(two.layer_count() == 1);
    CHECK(two.node(two.node(two.root()).left).value == 1);
    CHECK(two.node(two.node(two.root()).right).value == 0);

    const DecomposingTree nine = optimal_tree(9);
    CHECK(nine.node(nine.node(nine.root()).left).value == 4);
    CHECK(nine.node(nine.node(nine.root()).right).value == 4);
    CHECK(comparison_cost(nine) == 16);

    CHECK(optimal_tree(17).layer_count() == 4);
}

TEST_CASE("every constructed tree satisfies children-sum and terminal rules") {
    for (std::uint64_t m : {2ull, 3ull, 7ull, 12ull, 33ull, 100ull}) {
        const DecomposingTree tree = optimal_tree(m);
        for (const auto& n : tree.nodes()) {
            if (n.is_split()) {
                CHECK(n.value >= 2);
                CHECK(tree.node(n.left).value + tree.node(n.right).value == n.value - 1);
            } else {
                CHECK(n.value <= 1);
            }
        }
    }
}

TEST_CASE("optimal tree has floor(log2 m) layers") {
    for (std::uint64_t m = 2; m <= 1024; ++m)
        CHECK(optimal_tree(m).layer_count() == std::bit_width(m) - 1u);
}

TEST_CASE("layers and divisions: optimal and worst-case trees") {
    const auto ld2 = layers_and_divisions(optimal_tree(2));
    CHECK(ld2.layers == 1);
    CHECK(ld2.divisions == 1);

    const auto chain5 = layers_and_divisions(chain_tree(5));
    CHECK(chain5.layers == 4);
    CHECK(chain5.divisions == 4);

    CHECK(layers_and_divisions(optimal_tree(8)).layers == 3);
}

TEST_CASE("comparison cost: smallest tree, worst chain, optimal tree") {
    CHECK(comparison_cost(optimal_tree(2)) == 1);
    CHECK(comparison_cost(chain_tree(5)) == 10);
    CHECK(comparison_cost(optimal_tree(8)) == 13);
}

TEST_CASE("comparison bounds: pinned examples") {
    CHECK(comparison_bounds(2) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(comparison_bounds(5) == std::pair<std::uint64_t, std::uint64_t>{6, 10});
    CHECK(comparison_bounds(8) == std::pair<std::uint64_t, std::uint64_t>{13, 28});
    CHECK_THROWS_AS(comparison_bounds(1), std::invalid_argument);
}

TEST_CASE("closed-form bounds agree with the cost DP up to m=512") {
    const auto cmin = oracle::min_cost_table(512);
    const auto cmax = oracle::max_cost_table(512);
    for (std::uint64_t m = 2; m <= 512; ++m) {
        CHECK(optimal_comparison_count(m) == cmin[m]);
        CHECK(worst_comparison_count(m) == cmax[m]);
        CHECK(worst_comparison_count(m) == m * (m - 1) / 2);
        // the balanced tree achieves the minimum
        CHECK(comparison_cost(optimal_tree(m)) == cmin[m]);
    }
}

TEST_CASE("final layer sum and node count") {
    CHECK(final_layer_sum(2) == 1);
    CHECK(final_layer_sum(15) == 8);
    CHECK(final_layer_sum(17) == 2);
    // the deepest layer of the balanced tree really sums to the formula
    for (std::uint64_t m = 2; m <= 1024; ++m) {
        const DecomposingTree tree = optimal_tree(m);
        std::uint64_t sum = 0;
        for (const auto& n : tree.nodes())
            if (n.layer == tree.layer_count()) sum += n.value;
        CHECK(sum == final_layer_sum(m));
    }
    // node count is a different quantity: 4 nodes summing to 2 at m=17
    CHECK(final_layer_node_count(17) == 4);
    CHECK(final_layer_node_count(15) == 8);
}

TEST_CASE("fault tolerance: worked example, depth gap, degenerate sides") {
    // sides 14/13: final-layer sums 7 and 6, eight slots each; two ones can
    // move, so three splits share the optimal cost
    CHECK(fault_tolerance(14, 13) == 3);
    CHECK(fault_tolerance(13, 14) == 3);
    CHECK(fault_tolerance(4, 3) == 1);   // depths 2 vs 1
    CHECK(fault_tolerance(1, 1) == 1);
    CHECK(fault_tolerance(1, 0) == 1);
    CHECK(fault_tolerance(0, 0) == 1);
    CHECK(fault_tolerance(4, 4) == 2);
    CHECK(fault_tolerance(5, 5) == 3);
}

TEST_CASE("fault tolerance survey records the known even-m discrepancies") {
    const auto records = fault_tolerance_survey(16);
    REQUIRE(records.size() == 4);
    const std::uint64_t ms[] = {6, 10, 12, 14};
    const std::uint64_t formula[] = {2, 3, 3, 2};
    const std::uint64_t enumerated[] = {1, 2, 2, 1};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(records[k].m == ms[k]);
        CHECK(records[k].formula == formula[k]);
        CHECK(records[k].enumerated == enumerated[k]);
    }
    // odd m (both sides equal) all agree with enumeration, hence absent
    for (const auto& r : records) CHECK(r.m % 2 == 0);
}

TEST_CASE("max fault tolerance node per range") {
    CHECK(max_fault_tolerance_node(1) == 3);    // tau = 3, odd
    CHECK(max_fault_tolerance_node(3) == 11);   // tau = 12, even
    CHECK(max_fault_tolerance_node(4) == 23);   // tau = 24, even
    CHECK_THROWS_AS(max_fault_tolerance_node(0), std::invalid_argument);

    // the enumeration count of optimal splits peaks exactly there
    const auto cmin = oracle::min_cost_table(31);
    for (unsigned k : {2u, 3u, 4u}) {
        std::uint64_t best_m = 0, best = 0;
        for (std::uint64_t m = 1ull << k; m < (2ull << k); ++m) {
            const std::uint64_t c = oracle::optimal_split_count(m, cmin);
            if (c > best) {
                best = c;
                best_m = m;
            }
        }
        CHECK(best_m == max_fault_tolerance_node(k));
    }
}

TEST_CASE("whole-tree fault tolerance") {
    CHECK(tree_fault_tolerance(optimal_tree(2)) == 1);
    CHECK(tree_fault_tolerance(optimal_tree(3)) == 1);
    // m=7: the root split contributes 1, the two splits below contribute 1 each
    CHECK(tree_fault_tolerance(optimal_tree(7)) == 2);
    // a chain has a single admissible split per layer, all factors 1
    CHECK(tree_fault_tolerance(chain_tree(9)) == 1);
}

TEST_CASE("probability of optimal: pinned cases and range") {
    CHECK(probability_optimal(12, {8, 3}) == doctest::Approx(1.0 / 6.0));  // cross-range split
    CHECK(probability_optimal(3, {1, 1}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(probability_optimal(10, {5, 5}), std::invalid_argument);

    for (std::uint64_t m = 2; m <= 128; ++m) {
        const std::pair<std::uint64_t, std::uint64_t> split{m / 2, (m - 1) / 2};
        const double rho = probability_optimal(m, split);
        CHECK(rho > 0.0);
        CHECK(rho <= 1.0);
    }
}

TEST_CASE("enumeration: extremes, split counts, distribution") {
    const EnumerationReport three = enumerate_decompositions(3);
    CHECK(three.min_comparisons == 2);
    CHECK(three.max_comparisons == 3);

    const EnumerationReport five = enumerate_decompositions(5);
    CHECK(five.min_comparisons == 6);
    CHECK(five.max_comparisons == 10);
    CHECK(five.optimal_split_count == 2);  // {2,2} and {1,3}

    const EnumerationReport eight = enumerate_decompositions(8);
    CHECK(eight.min_comparisons == 13);
    CHECK(eight.max_comparisons == 28);
    CHECK(eight.optimal_split_count == 1);

    CHECK(enumerate_decompositions(9).optimal_split_count == 2);
    CHECK(enumerate_decompositions(11).optimal_split_count == 3);

    // distribution: tree count per cost; totals are the Catalan numbers
    for (std::uint64_t m : {4ull, 6ull, 10ull}) {
        const EnumerationReport rep = enumerate_decompositions(m);
        std::uint64_t total = 0;
        for (const auto& [cost, count] : rep.cost_distribution) {
            CHECK(cost >= rep.min_comparisons);
            CHECK(cost <= rep.max_comparisons);
            total += count;
        }
        CHECK(total == catalan(m));
        CHECK(rep.cost_distribution.begin()->first == rep.min_comparisons);
        CHECK(rep.cost_distribution.rbegin()->first == rep.max_comparisons);
    }

    CHECK_THROWS_AS(enumerate_decompositions(25), std::invalid_argument);  // above the cap
    CHECK_THROWS_AS(enumerate_decompositions(1), std::invalid_argument);
    CHECK(enumerate_decompositions(18, 18).min_comparisons == optimal_comparison_count(18));
    CHECK(enumerate_decompositions(18, 18).cost_distribution.empty());
}

TEST_CASE("analyze_tree assembles the metrics consistently") {
    const TreeMetrics t = analyze_tree(8);
    CHECK(t.layers == 3);
    CHECK(t.divisions == 4);
    CHECK(t.comparisons == 13);
    CHECK(t.lower_bound == 13);
    CHECK(t.upper_bound == 28);
    CHECK(t.final_layer_sum == 1);
    CHECK(t.optimal_split == std::pair<std::uint64_t, std::uint64_t>{4, 3});
    CHECK(t.fault_tolerance == 1);
    CHECK(t.max_fault_tolerance_node == 11);
    CHECK(t.probability_optimal == doctest::Approx(0.25));

    for (std::uint64_t m = 2; m <= 64; ++m) {
        const TreeMetrics tm = analyze_tree(m);
        CHECK(tm.lower_bound <= tm.comparisons);
        CHECK(tm.comparisons <= tm.upper_bound);
        CHECK(tm.fault_tolerance >= 1);
        CHECK(tm.probability_optimal > 0.0);
        CHECK(tm.probability_optimal <= 1.0);
    }
    CHECK_THROWS_AS(analyze_tree(1), std::invalid_argument);
}
