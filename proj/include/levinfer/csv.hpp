#pragma once

#include <string>
#include <vector>

#include "levinfer/matrix.hpp"

namespace levinfer {

enum class HeaderMode { Auto, Present, Absent };

// A parsed numeric CSV: every cell a finite double, rectangular.
struct CsvTable {
  std::vector<std::string> column_names;  // synthesized x1..xk when headerless
  bool had_header = false;
  Matrix values;
};

// Reads a comma-separated file (UTF-8, LF or CRLF, optional single header
// row, decimal or scientific floats). HeaderMode::Auto treats the first row
// as a header when any of its cells fails to parse as a number.
// Throws IoError (unreadable file) or ParseError (malformed cell, ragged
// row, non-finite value) naming the offending row and column.
CsvTable read_csv_table(const std::string& path, HeaderMode mode);

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Writes contents to path via a temp file and atomic rename, so failures
// never leave a partial file behind.
void atomic_write_file(const std::string& path, const std::string& contents);

// Serializes a table; header row emitted when names is non-empty.
std::string csv_to_string(const std::vector<std::string>& names, const Matrix& values);

// Compensated (Kahan) summation.
double kahan_sum(const double* x, std::size_t n);

}  // namespace levinfer
