#pragma once

// Matrix file format: one JSON object per file,
//
//   {"rows": R, "cols": C, "data": [[re, im], ...]}
//
// with R·C entries in row-major order. Numbers are written with 17
// significant digits, so a write/read cycle reproduces every double exactly.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absnorm/matlin.hpp"
#include "absnorm/schatten.hpp"

namespace absnorm::cli {

std::string format_matrix(const ComplexMatrix& a);
ComplexMatrix parse_matrix(std::string_view text);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a);

MatrixTuple read_tuple(const std::vector<std::filesystem::path>& paths);
/// Writes A_1.json … A_m.json into `dir` (created if needed); returns the paths in order.
std::vector<std::filesystem::path> write_tuple(const std::filesystem::path& dir, const MatrixTuple& t);

/// Shortest decimal with 17 significant digits ("%.17g").
std::string format_double(double v);

}  // namespace absnorm::cli
