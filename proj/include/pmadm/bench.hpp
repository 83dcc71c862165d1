#pragma once

#include "pmadm/decision.hpp"
#include "pmadm/tree_rank.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pmadm {

// One ranker selection for the sweep: "madm", "pmadm", or
// "lpmadm:<pivot>" where <pivot> is random:SEED | madm | avg-order |
// oracle-median.
struct AlgoSpec {
    Algorithm algorithm = Algorithm::madm;
    std::optional<PivotStrategy> pivot;
    std::string label;
};
AlgoSpec parse_algorithm_token(const std::string& token);

struct BenchSpec {
    std::uint64_t m_min = 100;
    std::uint64_t m_max = 300;
    std::uint64_t step = 50;
    std::size_t n = 4;
    std::uint64_t seed = 1;
    NormScheme scheme = NormScheme::max;
    std::vector<AlgoSpec> algorithms;
};

struct BenchRow {
    std::uint64_t m = 0;
    std::string algorithm;
    std::uint64_t comparisons = 0;
    std::uint64_t utility_evaluations = 0;
    std::uint64_t wall_time_ns = 0;
};

// Runs every selected algorithm on the same seeded random matrix per m.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

// Counter conventions are spelled out in a leading comment line so the table
// is interpretable on its own.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace pmadm
