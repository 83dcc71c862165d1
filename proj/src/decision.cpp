#include "pmadm/decision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace pmadm {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

DecisionMatrix::DecisionMatrix(std::vector<std::string> node_ids,
                               std::vector<AttributeSpec> attributes,
                               std::vector<double> values)
    : ids_(std::move(node_ids)), attrs_(std::move(attributes)), values_(std::move(values)) {
    require(!ids_.empty(), "decision matrix needs at least one node");
    require(!attrs_.empty(), "decision matrix needs at least one attribute");
    require(values_.size() == ids_.size() * attrs_.size(),
            "value grid does not match node_ids x attributes");

    std::unordered_set<std::string> seen;
    for (const auto& id : ids_) {
        require(!id.empty(), "node id must not be empty");
        require(seen.insert(id).second, "duplicate node id '" + id + "'");
    }
    seen.clear();
    for (const auto& a : attrs_) {
        require(!a.name.empty(), "attribute name must not be empty");
        require(seen.insert(a.name).second, "duplicate attribute name '" + a.name + "'");
    }
    for (double v : values_)
        require(std::isfinite(v), "decision matrix values must be finite");
}

DecisionMatrix DecisionMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    require(!rows.empty() && !rows.front().empty(), "from_rows needs a non-empty grid");
    const std::size_t n = rows.front().size();
    std::vector<std::string> ids;
    std::vector<AttributeSpec> attrs;
    std::vector<double> values;
    values.reserve(rows.size() * n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == n, "from_rows: ragged row");
        ids.push_back("n" + std::to_string(i + 1));
        values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    for (std::size_t j = 0; j < n; ++j)
        attrs.push_back({"p" + std::to_string(j + 1), Direction::benefit});
    return DecisionMatrix(std::move(ids), std::move(attrs), std::move(values));
}

DecisionMatrix DecisionMatrix::with_row(std::size_t node, std::span<const double> raw) const {
    require(node < node_count(), "with_row: node index out of range");
    require(raw.size() == attribute_count(), "with_row: row length mismatch");
    std::vector<double> values = values_;
    std::copy(raw.begin(), raw.end(), values.begin() + node * attrs_.size());
    return DecisionMatrix(ids_, attrs_, std::move(values));
}

NormalizationModel normalization_model(const DecisionMatrix& matrix, NormScheme scheme) {
    const std::size_t m = matrix.node_count();
    const std::size_t n = matrix.attribute_count();
    NormalizationModel model;
    model.scheme = scheme;
    model.columns.resize(n);

    for (std::size_t j = 0; j < n; ++j) {
        double lo = matrix.value(0, j), hi = matrix.value(0, j);
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, matrix.value(i, j));
            hi = std::max(hi, matrix.value(i, j));
        }
        const auto& attr = matrix.attributes()[j];
        if (scheme == NormScheme::max) {
            require(lo >= 0.0, "max normalization requires non-negative values; column '" +
                                   attr.name + "' has " + std::to_string(lo));
            if (attr.direction == Direction::cost)
                require(lo > 0.0, "cost column '" + attr.name +
                                      "' contains 0; max normalization would divide by it");
        }
        model.columns[j] = {attr.direction, lo, hi, lo == hi};
    }
    return model;
}

std::vector<double> NormalizationModel::apply(std::span<const double> raw, bool* clamped) const {
    require(raw.size() == columns.size(), "row length does not match the normalization model");
    std::vector<double> out(raw.size());
    bool any_clamp = false;

    for (std::size_t j = 0; j < raw.size(); ++j) {
        const Column& c = columns[j];
        const double v = raw[j];
        double x = 0.0;
        if (c.constant) {
            // The frozen domain is the single constant; anything else is clamped
            // onto it.
            x = scheme == NormScheme::max ? 1.0 : 0.0;
            if (v != c.col_max) any_clamp = true;
        } else if (scheme == NormScheme::max) {
            if (c.direction == Direction::benefit) {
                x = v / c.col_max;
            } else {
                x = v <= 0.0 ? 2.0 : c.col_min / v;  // forces the clamp below
            }
        } else {
            const double w = c.col_max - c.col_min;
            x = c.direction == Direction::benefit ? (v - c.col_min) / w : (c.col_max - v) / w;
        }
        if (x < 0.0) { x = 0.0; any_clamp = true; }
        if (x > 1.0) { x = 1.0; any_clamp = true; }
        out[j] = x;
    }
    if (clamped) *clamped = any_clamp;
    return out;
}

NormalizedMatrix normalize(const DecisionMatrix& matrix, NormScheme scheme) {
    const NormalizationModel model = normalization_model(matrix, scheme);
    NormalizedMatrix norm;
    norm.rows = matrix.node_count();
    norm.cols = matrix.attribute_count();
    norm.values.reserve(norm.rows * norm.cols);
    for (std::size_t i = 0; i < norm.rows; ++i) {
        bool clamp = false;
        std::vector<double> r = model.apply(matrix.row(i), &clamp);
        if (clamp)
            throw std::logic_error("normalization clamped a value of its own fitting data");
        norm.values.insert(norm.values.end(), r.begin(), r.end());
    }
    return norm;
}

std::vector<double> variances(const NormalizedMatrix& norm) {
    std::vector<double> out(norm.cols, 0.0);
    for (std::size_t j = 0; j < norm.cols; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < norm.rows; ++i) mean += norm.at(i, j);
        mean /= static_cast<double>(norm.rows);
        double acc = 0.0;
        for (std::size_t i = 0; i < norm.rows; ++i) {
            const double d = norm.at(i, j) - mean;
            acc += d * d;
        }
        out[j] = acc / static_cast<double>(norm.rows);
    }
    return out;
}

std::vector<double> weights(std::span<const double> variance_report) {
    require(!variance_report.empty(), "weights: empty variance report");
    double total = 0.0;
    for (double v : variance_report) {
        require(v >= 0.0 && std::isfinite(v), "weights: variances must be finite and >= 0");
        total += v;
    }
    std::vector<double> w(variance_report.size());
    if (total == 0.0) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(w.size()));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = variance_report[i] / total;
    }
    return w;
}

std::vector<double> madm_utilities(const NormalizedMatrix& norm, std::span<const double> w) {
    require(w.size() == norm.cols, "madm_utilities: weight/attribute dimension mismatch");
    std::vector<double> u(norm.rows, 0.0);
    for (std::size_t i = 0; i < norm.rows; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < norm.cols; ++j) acc += w[j] * norm.at(i, j);
        u[i] = acc;
    }
    return u;
}

void order_by_score_desc(std::span<const double> scores,
                         std::vector<std::size_t>& order,
                         std::vector<std::vector<std::size_t>>& tie_groups) {
    order.resize(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });

    tie_groups.clear();
    std::size_t start = 0;
    for (std::size_t k = 1; k <= order.size(); ++k) {
        if (k == order.size() || scores[order[k]] != scores[order[start]]) {
            if (k - start >= 2)
                tie_groups.emplace_back(order.begin() + start, order.begin() + k);
            start = k;
        }
    }
}

Ranking madm_rank(const NormalizedMatrix& norm) {
    const std::vector<double> v = variances(norm);
    const std::vector<double> w = weights(v);
    Ranking r;
    r.algorithm = Algorithm::madm;
    r.scores = madm_utilities(norm, w);
    r.comparison_count = 0;
    r.utility_evaluation_count = norm.rows;
    order_by_score_desc(r.scores, r.order, r.tie_groups);
    return r;
}

Ranking madm_rank(const DecisionMatrix& matrix, NormScheme scheme) {
    return madm_rank(normalize(matrix, scheme));
}

}  // namespace pmadm
