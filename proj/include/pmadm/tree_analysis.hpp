#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace pmadm {

// Layered integer tree tracking the subset sizes of a recursive pivot
// ranking. Splitting a node of value v >= 2 creates two children whose values
// sum to v - 1 (the pivot leaves the pool); values 0 and 1 are terminal.
class DecomposingTree {
public:
    struct Node {
        std::uint64_t value = 0;
        std::size_t layer = 0;
        int parent = -1;
        int left = -1;
        int right = -1;
        bool is_split() const { return left >= 0; }
    };

    explicit DecomposingTree(std::uint64_t root_value);

    // Returns the indices of the two children. Throws unless the parent is an
    // unsplit node of value >= 2 and the child values sum to value - 1.
    std::pair<int, int> split(int parent, std::uint64_t left_value, std::uint64_t right_value);

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    int root() const { return 0; }

    // Deepest layer index that contains a node (0 for a lone root).
    std::size_t layer_count() const { return deepest_; }

    // Node values grouped by layer, index 0 = root layer.
    std::vector<std::vector<std::uint64_t>> layer_values() const;

private:
    std::vector<Node> nodes_;
    std::size_t deepest_ = 0;
};

// Balanced decomposition: every value v >= 2 splits into
// (ceil((v-1)/2), floor((v-1)/2)).
DecomposingTree optimal_tree(std::uint64_t m);

struct LayersDivisions {
    std::size_t layers = 0;
    std::uint64_t divisions = 0;  // number of splits, i.e. nodes with value >= 2
};
LayersDivisions layers_and_divisions(const DecomposingTree& tree);

// Sum of node values below the root layer; equals the comparator-call count
// of the ranking run that produced the tree.
std::uint64_t comparison_cost(const DecomposingTree& tree);

// Comparison count of the balanced decomposition,
// sum over layers i = 1..floor(log2 m) of (m - 2^i + 1). This is the minimum
// over all pivot sequences (checked against enumerate_decompositions).
std::uint64_t optimal_comparison_count(std::uint64_t m);

// Worst case: always an extreme pivot, m(m-1)/2.
std::uint64_t worst_comparison_count(std::uint64_t m);

std::pair<std::uint64_t, std::uint64_t> comparison_bounds(std::uint64_t m);

// Sum of node values in the deepest layer of the balanced tree:
// m - 2^floor(log2 m) + 1.
std::uint64_t final_layer_sum(std::uint64_t m);

// Number of terminal nodes in the deepest layer of the balanced tree. Kept
// separate from final_layer_sum: the two differ whenever that layer contains
// zeros.
std::uint64_t final_layer_node_count(std::uint64_t m);

// Number of first-level splits whose minimal completion cost matches the
// balanced one, estimated by the ones/zeros transfer argument:
//   min(eps_max, 2^floor(log2 n_max) - eps_min) + 1
// when both sides' balanced subtrees have equal depth, otherwise 1 (no
// transfer can cross a depth gap; an empty side also admits none).
std::uint64_t fault_tolerance(std::uint64_t n1, std::uint64_t n2);

// Within the range 2^k <= m < 2^(k+1), the m with the largest fault
// tolerance: tau = 3 * 2^(k-1) when odd, else tau - 1.
std::uint64_t max_fault_tolerance_node(unsigned range_exponent);

// Per layer, the sum of fault tolerances of the splits feeding that layer;
// the product of those sums across layers.
std::uint64_t tree_fault_tolerance(const DecomposingTree& tree);

// Probability that a first-level split is optimal: fault_tolerance / floor(m/2)
// for same-range splits, 1 / floor(m/2) when the split crosses a range
// boundary. Requires n1 + n2 == m - 1.
double probability_optimal(std::uint64_t m, std::pair<std::uint64_t, std::uint64_t> split);

struct SplitCost {
    std::uint64_t low = 0, high = 0;  // unordered first-level split {low, high}
    std::uint64_t min_total = 0;      // m-1 plus the minimal completion of both sides
};

struct EnumerationReport {
    std::uint64_t m = 0;
    std::uint64_t min_comparisons = 0;
    std::uint64_t max_comparisons = 0;
    std::uint64_t optimal_split_count = 0;  // unordered first-level splits reaching the minimum
    std::vector<SplitCost> splits;          // one entry per unordered first-level split
    // total comparisons -> number of decomposition trees (ordered splits);
    // filled only for m <= 16.
    std::map<std::uint64_t, std::uint64_t> cost_distribution;
};

// Exhaustive exploration of all pivot sequences, memoized on subtree value.
EnumerationReport enumerate_decompositions(std::uint64_t m, std::uint64_t cap = 20);

// Formula-vs-enumeration record for the fault tolerance of balanced splits.
struct FaultToleranceDiscrepancy {
    std::uint64_t m = 0, n1 = 0, n2 = 0;
    std::uint64_t formula = 0;
    std::uint64_t enumerated = 0;
};

// Compares fault_tolerance with the enumeration count on the balanced split
// of every m in [2, m_max] where the equal-depth precondition holds.
// Mismatches come back as records, not failures.
std::vector<FaultToleranceDiscrepancy> fault_tolerance_survey(std::uint64_t m_max = 16);

struct TreeMetrics {
    std::uint64_t m = 0;
    std::size_t layers = 0;
    std::uint64_t divisions = 0;
    std::uint64_t comparisons = 0;  // of the balanced tree
    std::uint64_t lower_bound = 0;
    std::uint64_t upper_bound = 0;
    std::uint64_t final_layer_sum = 0;
    std::uint64_t final_layer_node_count = 0;
    std::pair<std::uint64_t, std::uint64_t> optimal_split{0, 0};
    std::uint64_t fault_tolerance = 0;       // of the balanced split
    std::uint64_t whole_tree_fault_tolerance = 0;
    std::uint64_t max_fault_tolerance_node = 0;  // for m's range
    double probability_optimal = 0.0;            // of the balanced split
};

TreeMetrics analyze_tree(std::uint64_t m);  // m >= 2

}  // namespace pmadm
