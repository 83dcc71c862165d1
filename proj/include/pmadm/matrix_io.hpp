#pragma once

#include "pmadm/decision.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

namespace pmadm {

// Comma-separated matrix file:
//   id,<attr1>,<attr2>,...
//   #direction,benefit|cost,...     (optional)
//   <node id>,<value>,...           (one row per node)
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t row, std::size_t column);
    std::size_t row = 0;     // 1-based line number
    std::size_t column = 0;  // 1-based field number, 0 when the whole line is at fault
};

DecisionMatrix read_matrix_csv(std::istream& in);
DecisionMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_csv(std::ostream& out, const DecisionMatrix& matrix);
void write_matrix_file(const std::filesystem::path& path, const DecisionMatrix& matrix);

// m x n benefit matrix with entries uniform in [0, 1].
DecisionMatrix random_matrix(std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace pmadm
