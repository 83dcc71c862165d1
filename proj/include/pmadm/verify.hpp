#pragma once

#include "pmadm/decision.hpp"
#include "pmadm/report.hpp"

#include <filesystem>

namespace pmadm {

// Monte-Carlo property run over seeded random matrices:
//   - how often the pairwise comparator is intransitive (any directed triple),
//   - whether the tree ranking reproduces the round-robin order on
//     cycle-free instances (all four pivot strategies),
//   - whether pairwise outcomes among untouched nodes survive a single-node
//     perturbation bit-identically.
struct VerifyParams {
    std::uint64_t trials = 1000;
    std::size_t m = 5;
    std::size_t n = 4;
    std::uint64_t seed = 1;
    NormScheme scheme = NormScheme::max;
    std::filesystem::path fixture_dir = ".";
    bool write_fixtures = true;  // first counterexample per property, as a matrix file
};

struct VerifyReport {
    VerifyParams params;
    std::uint64_t cycle_instances = 0;   // instances containing at least one cycle
    std::uint64_t equality_checked = 0;  // cycle-free instances
    std::uint64_t equality_matched = 0;
    std::uint64_t stability_checked = 0;
    std::uint64_t stability_passed = 0;
    std::vector<std::string> fixtures;   // paths of written counterexamples
};

VerifyReport run_verify(const VerifyParams& params);
Json verify_report_json(const VerifyReport& report);

}  // namespace pmadm
