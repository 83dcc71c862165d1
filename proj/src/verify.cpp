#include "pmadm/verify.hpp"

#include "pmadm/matrix_io.hpp"
#include "pmadm/pairwise.hpp"
#include "pmadm/sensitivity.hpp"
#include "pmadm/tree_rank.hpp"

#include <random>
#include <stdexcept>

namespace pmadm {

namespace {

std::string write_fixture(const VerifyParams& params, const char* tag, std::uint64_t trial,
                          const DecisionMatrix& matrix) {
    const std::filesystem::path path =
        params.fixture_dir / (std::string(tag) + "_fixture_" + std::to_string(trial) + ".csv");
    write_matrix_file(path, matrix);
    return path.string();
}

}  // namespace

VerifyReport run_verify(const VerifyParams& params) {
    if (params.trials < 1) throw std::invalid_argument("verify: need at least one trial");
    if (params.m < 2 || params.n < 1) throw std::invalid_argument("verify: need m >= 2, n >= 1");

    VerifyReport rep;
    rep.params = params;
    bool cycle_fixture_written = false;
    bool stability_fixture_written = false;

    for (std::uint64_t t = 0; t < params.trials; ++t) {
        const std::uint64_t trial_seed = params.seed + t;
        const DecisionMatrix matrix = random_matrix(params.m, params.n, trial_seed);

        const bool has_cycle = find_cycle(matrix, params.scheme).has_value();
        if (has_cycle) {
            ++rep.cycle_instances;
            if (params.write_fixtures && !cycle_fixture_written) {
                rep.fixtures.push_back(write_fixture(params, "cycle", t, matrix));
                cycle_fixture_written = true;
            }
        } else {
            ++rep.equality_checked;
            const PmadmResult full = pmadm_rank(matrix, params.scheme);
            const PivotStrategy strategies[] = {
                PivotStrategy::random(trial_seed), PivotStrategy::madm(),
                PivotStrategy::avg_order(), PivotStrategy::oracle_median()};
            bool matched = true;
            for (const PivotStrategy& s : strategies)
                matched = matched &&
                          lpmadm_rank(full.normalized, s).ranking.order == full.ranking.order;
            if (matched) ++rep.equality_matched;
        }

        // Single-node perturbation: outcomes among the untouched nodes must
        // come through bit-identical.
        std::mt19937_64 rng(trial_seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        const std::size_t node = static_cast<std::size_t>(rng() % params.m);
        std::vector<double> new_row(params.n);
        for (double& v : new_row) v = uniform(rng);

        ++rep.stability_checked;
        const StabilityReport stab =
            stability_experiment(matrix, params.scheme, node, new_row);
        if (stab.pmadm_untouched_outcomes_identical) {
            ++rep.stability_passed;
        } else if (params.write_fixtures && !stability_fixture_written) {
            rep.fixtures.push_back(write_fixture(params, "stability", t, matrix));
            stability_fixture_written = true;
        }
    }
    return rep;
}

Json verify_report_json(const VerifyReport& rep) {
    Json j;
    j["trials"] = rep.params.trials;
    j["m"] = rep.params.m;
    j["n"] = rep.params.n;
    j["seed"] = rep.params.seed;
    j["scheme"] = scheme_name(rep.params.scheme);
    j["cycle_instances"] = rep.cycle_instances;
    j["cycle_rate"] =
        static_cast<double>(rep.cycle_instances) / static_cast<double>(rep.params.trials);
    j["order_equality"] = Json{{"checked", rep.equality_checked},
                               {"matched", rep.equality_matched}};
    j["stability"] = Json{{"checked", rep.stability_checked},
                          {"passed", rep.stability_passed}};
    j["counterexample_fixtures"] = rep.fixtures;
    return j;
}

}  // namespace pmadm
