#include "pmadm/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace pmadm {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    for (std::string& f : fields) {
        const auto b = f.find_first_not_of(" \t\r");
        const auto e = f.find_last_not_of(" \t\r");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    return fields;
}

double parse_number(const std::string& text, std::size_t row, std::size_t column) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw ParseError("'" + text + "' is not a finite number", row, column);
    return value;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t row, std::size_t column)
    : std::runtime_error("row " + std::to_string(row) +
                         (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                         what),
      row(row),
      column(column) {}

DecisionMatrix read_matrix_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    std::vector<AttributeSpec> attrs;
    std::vector<std::string> ids;
    std::vector<double> values;
    bool header_seen = false;
    bool directions_allowed = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;

        std::vector<std::string> fields = split_csv_line(line);

        if (!header_seen) {
            if (fields.size() < 2) throw ParseError("header needs an id column and at least one attribute", lineno, 0);
            if (fields[0] != "id") throw ParseError("header must start with 'id'", lineno, 1);
            for (std::size_t j = 1; j < fields.size(); ++j) {
                if (fields[j].empty()) throw ParseError("empty attribute name", lineno, j + 1);
                attrs.push_back({fields[j], Direction::benefit});
            }
            header_seen = true;
            directions_allowed = true;
            continue;
        }

        if (fields[0] == "#direction") {
            if (!directions_allowed)
                throw ParseError("#direction must be the row right after the header", lineno, 1);
            if (fields.size() != attrs.size() + 1)
                throw ParseError("#direction row has the wrong number of fields", lineno, 0);
            for (std::size_t j = 1; j < fields.size(); ++j) {
                if (fields[j] == "benefit")
                    attrs[j - 1].direction = Direction::benefit;
                else if (fields[j] == "cost")
                    attrs[j - 1].direction = Direction::cost;
                else
                    throw ParseError("direction must be 'benefit' or 'cost', got '" + fields[j] + "'",
                                     lineno, j + 1);
            }
            directions_allowed = false;
            continue;
        }
        if (!fields[0].empty() && fields[0][0] == '#') continue;  // comment line
        directions_allowed = false;

        if (fields.size() != attrs.size() + 1)
            throw ParseError("expected " + std::to_string(attrs.size() + 1) + " fields, got " +
                                 std::to_string(fields.size()),
                             lineno, 0);
        if (fields[0].empty()) throw ParseError("empty node id", lineno, 1);
        ids.push_back(fields[0]);
        for (std::size_t j = 1; j < fields.size(); ++j)
            values.push_back(parse_number(fields[j], lineno, j + 1));
    }

    if (!header_seen) throw ParseError("missing header row", 1, 0);
    if (ids.empty()) throw ParseError("no data rows", lineno + 1, 0);
    try {
        return DecisionMatrix(std::move(ids), std::move(attrs), std::move(values));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 0);
    }
}

DecisionMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
    return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const DecisionMatrix& matrix) {
    out << "id";
    for (const auto& a : matrix.attributes()) out << ',' << a.name;
    out << '\n';
    out << "#direction";
    for (const auto& a : matrix.attributes())
        out << ',' << (a.direction == Direction::benefit ? "benefit" : "cost");
    out << '\n';
    out.precision(17);
    for (std::size_t i = 0; i < matrix.node_count(); ++i) {
        out << matrix.node_ids()[i];
        for (std::size_t j = 0; j < matrix.attribute_count(); ++j) out << ',' << matrix.value(i, j);
        out << '\n';
    }
}

void write_matrix_file(const std::filesystem::path& path, const DecisionMatrix& matrix) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path.string() + "'");
    write_matrix_csv(out, matrix);
}

DecisionMatrix random_matrix(std::size_t m, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<std::vector<double>> rows(m, std::vector<double>(n));
    for (auto& row : rows)
        for (double& v : row) v = uniform(rng);
    return DecisionMatrix::from_rows(rows);
}

}  // namespace pmadm
