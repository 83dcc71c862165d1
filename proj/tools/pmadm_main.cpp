// Command-line front end: rank matrices, analyze decomposing trees, sweep
// comparison counts, and run the Monte-Carlo property checks.
//
// Exit codes: 0 success, 2 input error, 70 internal invariant violation.

#include "pmadm/bench.hpp"
#include "pmadm/matrix_io.hpp"
#include "pmadm/pairwise.hpp"
#include "pmadm/report.hpp"
#include "pmadm/tree_rank.hpp"
#include "pmadm/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInternal = 70;

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::invalid_argument("cannot write '" + output_path + "'");
    out << text;
}

int run_rank(const std::string& input, const std::string& algorithm, const std::string& scheme,
             const std::string& pivot, const std::string& output) {
    const pmadm::DecisionMatrix matrix = pmadm::read_matrix_file(input);
    const pmadm::NormScheme ns = pmadm::parse_scheme(scheme);

    pmadm::Json report;
    if (algorithm == "madm") {
        report = pmadm::ranking_report(matrix, pmadm::madm_rank(matrix, ns), ns);
    } else if (algorithm == "pmadm") {
        report = pmadm::ranking_report(matrix, pmadm::pmadm_rank(matrix, ns).ranking, ns);
    } else if (algorithm == "lpmadm") {
        const pmadm::AlgoSpec spec = pmadm::parse_algorithm_token("lpmadm:" + pivot);
        const pmadm::LpmadmResult res = pmadm::lpmadm_rank(matrix, ns, *spec.pivot);
        report = pmadm::ranking_report(matrix, res.ranking, ns, spec.pivot->label(), &res.tree);
    } else {
        throw std::invalid_argument("unknown algorithm '" + algorithm +
                                    "' (use madm, pmadm, or lpmadm)");
    }
    emit(output, pmadm::report_to_string(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairwise multi-attribute decision making toolkit"};
    app.require_subcommand(1);

    // rank
    std::string rank_input, rank_output;
    std::string rank_algorithm = "pmadm", rank_scheme = "max", rank_pivot = "madm";
    CLI::App* rank = app.add_subcommand("rank", "rank the nodes of a matrix file");
    rank->add_option("-i,--input", rank_input, "matrix file (csv)")->required();
    rank->add_option("-a,--algorithm", rank_algorithm, "madm | pmadm | lpmadm");
    rank->add_option("-s,--scheme", rank_scheme, "max | minmax");
    rank->add_option("-p,--pivot", rank_pivot,
                     "lpmadm pivot: random:SEED | madm | avg-order | oracle-median");
    rank->add_option("-o,--output", rank_output, "report path (default stdout)");

    // analyze-tree
    std::uint64_t tree_m = 0;
    std::string tree_output;
    CLI::App* analyze = app.add_subcommand("analyze-tree", "decomposing-tree metrics for m nodes");
    analyze->add_option("-m,--m", tree_m, "number of nodes (>= 2)")->required();
    analyze->add_option("-o,--output", tree_output, "report path (default stdout)");

    // bench
    pmadm::BenchSpec bench;
    std::string bench_algorithms = "madm,pmadm,lpmadm:madm,lpmadm:oracle-median";
    std::string bench_scheme = "max", bench_output;
    CLI::App* bench_cmd = app.add_subcommand("bench", "comparison-count sweep over m");
    bench_cmd->add_option("--m-min", bench.m_min, "first m (default 100)");
    bench_cmd->add_option("--m-max", bench.m_max, "last m (default 300)");
    bench_cmd->add_option("--step", bench.step, "m increment (default 50)");
    bench_cmd->add_option("-n,--n", bench.n, "attributes per node (default 4)");
    bench_cmd->add_option("--seed", bench.seed, "sweep seed (default 1)");
    bench_cmd->add_option("-s,--scheme", bench_scheme, "max | minmax");
    bench_cmd->add_option("-a,--algorithms", bench_algorithms,
                          "comma list: madm | pmadm | lpmadm[:pivot]");
    bench_cmd->add_option("-o,--output", bench_output, "csv path (default stdout)");

    // verify
    pmadm::VerifyParams verify;
    std::string verify_scheme = "max", verify_output, verify_fixture_dir = ".";
    CLI::App* verify_cmd = app.add_subcommand("verify", "Monte-Carlo property checks");
    verify_cmd->add_option("-t,--trials", verify.trials, "number of random instances");
    verify_cmd->add_option("-m,--m", verify.m, "nodes per instance (default 5)");
    verify_cmd->add_option("-n,--n", verify.n, "attributes per node (default 4)");
    verify_cmd->add_option("--seed", verify.seed, "base seed (default 1)");
    verify_cmd->add_option("-s,--scheme", verify_scheme, "max | minmax");
    verify_cmd->add_option("--fixture-dir", verify_fixture_dir,
                           "where counterexample matrices are written");
    verify_cmd->add_option("-o,--output", verify_output, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (rank->parsed())
            return run_rank(rank_input, rank_algorithm, rank_scheme, rank_pivot, rank_output);
        if (analyze->parsed()) {
            if (tree_m < 2) throw std::invalid_argument("analyze-tree: m must be >= 2");
            emit(tree_output, pmadm::report_to_string(pmadm::tree_report(pmadm::analyze_tree(tree_m))));
            return 0;
        }
        if (bench_cmd->parsed()) {
            bench.scheme = pmadm::parse_scheme(bench_scheme);
            std::stringstream tokens(bench_algorithms);
            std::string token;
            while (std::getline(tokens, token, ','))
                if (!token.empty()) bench.algorithms.push_back(pmadm::parse_algorithm_token(token));
            std::ostringstream csv;
            pmadm::write_bench_csv(csv, pmadm::run_bench(bench));
            emit(bench_output, csv.str());
            return 0;
        }
        if (verify_cmd->parsed()) {
            verify.scheme = pmadm::parse_scheme(verify_scheme);
            verify.fixture_dir = verify_fixture_dir;
            const pmadm::VerifyReport rep = pmadm::run_verify(verify);
            emit(verify_output, pmadm::report_to_string(pmadm::verify_report_json(rep)));
            return 0;
        }
    } catch (const pmadm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;  // unreachable: a subcommand is required
}
