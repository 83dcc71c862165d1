#include "pmadm/bench.hpp"

#include "pmadm/matrix_io.hpp"
#include "pmadm/pairwise.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

namespace pmadm {

AlgoSpec parse_algorithm_token(const std::string& token) {
    AlgoSpec spec;
    spec.label = token;
    if (token == "madm") {
        spec.algorithm = Algorithm::madm;
        return spec;
    }
    if (token == "pmadm") {
        spec.algorithm = Algorithm::pmadm;
        return spec;
    }
    if (token.rfind("lpmadm", 0) == 0) {
        spec.algorithm = Algorithm::lpmadm;
        std::string pivot = token.size() > 6 && token[6] == ':' ? token.substr(7) : "madm";
        if (pivot == "madm")
            spec.pivot = PivotStrategy::madm();
        else if (pivot == "avg-order")
            spec.pivot = PivotStrategy::avg_order();
        else if (pivot == "oracle-median")
            spec.pivot = PivotStrategy::oracle_median();
        else if (pivot.rfind("random:", 0) == 0)
            spec.pivot = PivotStrategy::random(std::stoull(pivot.substr(7)));
        else
            throw std::invalid_argument("unknown pivot '" + pivot +
                                        "' (use random:SEED, madm, avg-order, oracle-median)");
        spec.label = "lpmadm:" + spec.pivot->label();
        return spec;
    }
    throw std::invalid_argument("unknown algorithm '" + token +
                                "' (use madm, pmadm, or lpmadm[:pivot])");
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
    if (spec.m_min < 2 || spec.m_max < spec.m_min || spec.step == 0)
        throw std::invalid_argument("bench: need 2 <= m-min <= m-max and step >= 1");
    if (spec.n == 0) throw std::invalid_argument("bench: need n >= 1");
    if (spec.algorithms.empty()) throw std::invalid_argument("bench: no algorithms selected");

    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;

    for (std::uint64_t m = spec.m_min; m <= spec.m_max; m += spec.step) {
        const DecisionMatrix matrix = random_matrix(m, spec.n, spec.seed + m);
        for (const AlgoSpec& algo : spec.algorithms) {
            BenchRow row;
            row.m = m;
            row.algorithm = algo.label;
            const auto start = clock::now();
            switch (algo.algorithm) {
                case Algorithm::madm: {
                    const Ranking r = madm_rank(matrix, spec.scheme);
                    row.comparisons = r.comparison_count;
                    row.utility_evaluations = r.utility_evaluation_count;
                    break;
                }
                case Algorithm::pmadm: {
                    const PmadmResult r = pmadm_rank(matrix, spec.scheme);
                    row.comparisons = r.ranking.comparison_count;
                    row.utility_evaluations = r.ranking.utility_evaluation_count;
                    break;
                }
                case Algorithm::lpmadm: {
                    const LpmadmResult r = lpmadm_rank(matrix, spec.scheme, *algo.pivot);
                    row.comparisons = r.ranking.comparison_count;
                    row.utility_evaluations = r.ranking.utility_evaluation_count;
                    break;
                }
            }
            row.wall_time_ns = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count());
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "# utility_evaluations counts weighted row sums: madm = m per ranking, "
           "pmadm and lpmadm = 2 per pairwise comparison\n";
    out << "m,algorithm,comparisons,utility_evaluations,wall_time_ns\n";
    for (const BenchRow& r : rows)
        out << r.m << ',' << r.algorithm << ',' << r.comparisons << ',' << r.utility_evaluations
            << ',' << r.wall_time_ns << '\n';
}

}  // namespace pmadm
