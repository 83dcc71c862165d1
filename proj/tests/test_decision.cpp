#include "pmadm/decision.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

using namespace pmadm;

namespace {

// Three nodes, two attributes; the first attribute's values sit close
// together while the second spreads wide, so nearly all weight lands on it.
DecisionMatrix narrow_wide_example() {
    return DecisionMatrix::from_rows({{101.0, 0.1}, {102.0, 0.5}, {103.0, 0.9}});
}

DecisionMatrix single_column(const std::vector<double>& values) {
    std::vector<std::vector<double>> rows;
    for (double v : values) rows.push_back({v});
    return DecisionMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("decision matrix validation") {
    CHECK_THROWS_AS(DecisionMatrix({}, {{"p1", Direction::benefit}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(DecisionMatrix({"a"}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(DecisionMatrix({"a", "a"}, {{"p1", Direction::benefit}}, {1.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DecisionMatrix({"a"}, {{"p1", Direction::benefit}}, {1.0, 2.0}),
                    std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(DecisionMatrix({"a"}, {{"p1", Direction::benefit}}, {nan}),
                    std::invalid_argument);
    CHECK_THROWS_AS(single_column({1.0, INFINITY}), std::invalid_argument);
}

TEST_CASE("max normalization maps constant benefit columns to 1") {
    const NormalizedMatrix norm = normalize(single_column({2.0, 2.0, 2.0}), NormScheme::max);
    for (std::size_t i = 0; i < 3; ++i) CHECK(norm.at(i, 0) == 1.0);
    // all-zero constant column included
    const NormalizedMatrix zeros = normalize(single_column({0.0, 0.0}), NormScheme::max);
    CHECK(zeros.at(0, 0) == 1.0);
}

TEST_CASE("max normalization of the narrow/wide example") {
    const NormalizedMatrix norm = normalize(narrow_wide_example(), NormScheme::max);
    CHECK(norm.at(0, 0) == doctest::Approx(101.0 / 103.0).epsilon(1e-12));
    CHECK(norm.at(1, 0) == doctest::Approx(102.0 / 103.0).epsilon(1e-12));
    CHECK(norm.at(2, 0) == 1.0);
    CHECK(norm.at(0, 1) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(norm.at(1, 1) == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
    CHECK(norm.at(2, 1) == 1.0);
}

TEST_CASE("max normalization of a single ascending column") {
    const NormalizedMatrix norm =
        normalize(single_column({0.1, 0.2, 0.3, 0.4, 0.9}), NormScheme::max);
    const double expected[] = {1.0 / 9.0, 2.0 / 9.0, 1.0 / 3.0, 4.0 / 9.0, 1.0};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(norm.at(i, 0) == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("cost columns are inverted so larger is better everywhere") {
    DecisionMatrix m({"a", "b"}, {{"delay", Direction::cost}}, {2.0, 4.0});
    const NormalizedMatrix mx = normalize(m, NormScheme::max);
    CHECK(mx.at(0, 0) == 1.0);  // min/v = 2/2
    CHECK(mx.at(1, 0) == 0.5);  // 2/4
    const NormalizedMatrix mm = normalize(m, NormScheme::min_max);
    CHECK(mm.at(0, 0) == 1.0);  // (max-v)/(max-min)
    CHECK(mm.at(1, 0) == 0.0);
}

TEST_CASE("degenerate inputs for the max scheme are rejected with a message") {
    DecisionMatrix zero_cost({"a", "b"}, {{"delay", Direction::cost}}, {0.0, 4.0});
    CHECK_THROWS_WITH_AS(normalize(zero_cost, NormScheme::max), doctest::Contains("contains 0"),
                         std::invalid_argument);
    CHECK_THROWS_AS(normalize(single_column({-1.0, 2.0}), NormScheme::max), std::invalid_argument);
    // min-max handles negatives fine
    const NormalizedMatrix mm = normalize(single_column({-1.0, 2.0}), NormScheme::min_max);
    CHECK(mm.at(0, 0) == 0.0);
    CHECK(mm.at(1, 0) == 1.0);
}

TEST_CASE("min-max maps constant columns to 0") {
    const NormalizedMatrix mm = normalize(single_column({3.0, 3.0}), NormScheme::min_max);
    CHECK(mm.at(0, 0) == 0.0);
    CHECK(mm.at(1, 0) == 0.0);
}

TEST_CASE("normalized values stay in [0,1] for random matrices under both schemes") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const DecisionMatrix m = DecisionMatrix::from_rows(oracle::random_rows(6, 4, seed));
        for (NormScheme s : {NormScheme::max, NormScheme::min_max}) {
            const NormalizedMatrix norm = normalize(m, s);
            for (double v : norm.values) {
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
        }
    }
}

TEST_CASE("variance of a constant column is zero, of a two-value column d^2/4") {
    const NormalizedMatrix ones{3, 1, {1.0, 1.0, 1.0}};
    CHECK(variances(ones)[0] == 0.0);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const double a = uniform(rng), b = uniform(rng);
        const NormalizedMatrix two{2, 1, {a, b}};
        CHECK(variances(two)[0] == doctest::Approx((a - b) * (a - b) / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("variances match the two-pass oracle on random columns") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto rows = oracle::random_rows(7, 3, seed ^ 0xabcdef);
        const NormalizedMatrix norm = normalize(DecisionMatrix::from_rows(rows), NormScheme::max);
        const std::vector<double> v = variances(norm);
        for (std::size_t j = 0; j < norm.cols; ++j) {
            std::vector<double> column;
            for (std::size_t i = 0; i < norm.rows; ++i) column.push_back(norm.at(i, j));
            CHECK(std::abs(v[j] - oracle::population_variance(column)) < 1e-12);
        }
    }
}

TEST_CASE("weights: uniform fallback, symmetry, and normalization") {
    const std::vector<double> zero{0.0, 0.0, 0.0};
    CHECK(weights(zero) == std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3});

    const std::vector<double> same{0.7, 0.7};
    CHECK(weights(same)[0] == doctest::Approx(0.5));
    CHECK(weights(same)[1] == doctest::Approx(0.5));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        std::vector<double> v(4);
        for (double& x : v) x = uniform(rng);
        const std::vector<double> w = weights(v);
        double total = 0.0;
        for (double x : w) {
            CHECK(x >= 0.0);
            total += x;
        }
        CHECK(std::abs(total - 1.0) < 1e-12);
    }
}

TEST_CASE("narrow/wide example: variances, weights, utilities, order") {
    const NormalizedMatrix norm = normalize(narrow_wide_example(), NormScheme::max);
    const std::vector<double> v = variances(norm);
    CHECK(v[0] == doctest::Approx(2.0 / 31827.0).epsilon(1e-12));  // ~6.284e-5
    CHECK(v[1] == doctest::Approx(32.0 / 243.0).epsilon(1e-12));   // ~0.13169

    const std::vector<double> w = weights(v);
    CHECK(w[0] == doctest::Approx(4.7696157809509785e-4).epsilon(1e-9));
    CHECK(w[1] == doctest::Approx(0.99952303842190484).epsilon(1e-12));

    const std::vector<double> u = madm_utilities(norm, w);
    CHECK(u[0] == doctest::Approx(0.11152581556844082).epsilon(1e-9));
    CHECK(u[1] == doctest::Approx(0.55576290778422042).epsilon(1e-9));
    CHECK(u[2] == doctest::Approx(1.0).epsilon(1e-12));

    const Ranking r = madm_rank(narrow_wide_example(), NormScheme::max);
    CHECK(r.order == std::vector<std::size_t>{2, 1, 0});
    CHECK(r.comparison_count == 0);
    CHECK(r.utility_evaluation_count == 3);
}

TEST_CASE("madm utilities: single node, extreme rows, dimension mismatch") {
    const NormalizedMatrix one{1, 2, {0.3, 0.8}};
    const std::vector<double> w{0.25, 0.75};
    CHECK(madm_utilities(one, w)[0] == doctest::Approx(0.25 * 0.3 + 0.75 * 0.8));

    const NormalizedMatrix extremes{2, 2, {1.0, 1.0, 0.0, 0.0}};
    const std::vector<double> uniform{0.5, 0.5};
    const std::vector<double> u = madm_utilities(extremes, uniform);
    CHECK(u[0] == 1.0);
    CHECK(u[1] == 0.0);

    CHECK_THROWS_AS(madm_utilities(extremes, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("madm_rank breaks ties by ascending index") {
    const DecisionMatrix m = DecisionMatrix::from_rows({{0.4, 0.7}, {0.4, 0.7}, {0.4, 0.7}});
    const Ranking r = madm_rank(m, NormScheme::max);
    CHECK(r.order == std::vector<std::size_t>{0, 1, 2});
    REQUIRE(r.tie_groups.size() == 1);
    CHECK(r.tie_groups[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("single-attribute ranking preserves the value order") {
    const Ranking r = madm_rank(single_column({0.1, 0.2, 0.3, 0.4, 0.9}), NormScheme::max);
    CHECK(r.order == std::vector<std::size_t>{4, 3, 2, 1, 0});
}

TEST_CASE("scaling a benefit column by a power of two leaves max normalization bit-identical") {
    // Power-of-two scales keep both the product and the quotient exact.
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick_exp(-8, 8);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto rows = oracle::random_rows(5, 3, seed * 131 + 7);
        const NormalizedMatrix before = normalize(DecisionMatrix::from_rows(rows), NormScheme::max);
        const double c = std::ldexp(1.0, pick_exp(rng));
        const std::size_t column = seed % 3;
        for (auto& r : rows) r[column] *= c;
        const NormalizedMatrix after = normalize(DecisionMatrix::from_rows(rows), NormScheme::max);
        CHECK(before.values == after.values);

        const Ranking ra = madm_rank(DecisionMatrix::from_rows(rows), NormScheme::max);
        const Ranking rb = madm_rank(before);
        CHECK(ra.order == rb.order);
    }
}

TEST_CASE("increasing one normalized value raises only that node's utility") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> uniform(0.01, 1.0);
    for (int k = 0; k < 100; ++k) {
        NormalizedMatrix norm{4, 3, {}};
        norm.values.resize(12);
        for (double& v : norm.values) v = uniform(rng) * 0.9;
        std::vector<double> w(3);
        double total = 0.0;
        for (double& x : w) total += (x = uniform(rng));  // strictly positive weights
        for (double& x : w) x /= total;

        const std::vector<double> before = madm_utilities(norm, w);
        const std::size_t node = k % 4, attr = k % 3;
        norm.values[node * 3 + attr] += 0.05;
        const std::vector<double> after = madm_utilities(norm, w);
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == node)
                CHECK(after[i] > before[i]);
            else
                CHECK(after[i] == before[i]);
        }
    }
}

TEST_CASE("normalization model clamps out-of-domain rows and flags it") {
    const DecisionMatrix m =
        DecisionMatrix({"a", "b"}, {{"up", Direction::benefit}, {"down", Direction::cost}},
                       {1.0, 2.0, 3.0, 4.0});
    const NormalizationModel model = normalization_model(m, NormScheme::max);

    bool clamped = false;
    const std::vector<double> in_domain = model.apply(std::vector<double>{2.0, 3.0}, &clamped);
    CHECK(!clamped);
    CHECK(in_domain[0] == doctest::Approx(2.0 / 3.0));
    CHECK(in_domain[1] == doctest::Approx(2.0 / 3.0));

    const std::vector<double> above = model.apply(std::vector<double>{5.0, 1.0}, &clamped);
    CHECK(clamped);
    CHECK(above[0] == 1.0);  // benefit above the frozen max
    CHECK(above[1] == 1.0);  // cost below the frozen min

    const std::vector<double> below = model.apply(std::vector<double>{-1.0, 10.0}, &clamped);
    CHECK(clamped);
    CHECK(below[0] == 0.0);
    CHECK(below[1] == doctest::Approx(0.2));
}
