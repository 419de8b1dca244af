#include "levinfer/csv.hpp"

#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "levinfer/errors.hpp"

namespace levinfer {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool parse_double(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size() || errno == ERANGE) return false;
  out = v;
  return true;
}

}  // namespace

CsvTable read_csv_table(const std::string& path, HeaderMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // Strip a UTF-8 BOM and trailing blank lines.
  if (!lines.empty() && lines[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    lines[0] = lines[0].substr(3);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("file is empty: " + path);

  const std::vector<std::string> first = split_fields(lines[0]);
  const std::size_t ncols = first.size();

  bool has_header = false;
  switch (mode) {
    case HeaderMode::Present:
      has_header = true;
      break;
    case HeaderMode::Absent:
      has_header = false;
      break;
    case HeaderMode::Auto: {
      double ignored;
      for (const std::string& cell : first) {
        if (!parse_double(cell, ignored)) {
          has_header = true;
          break;
        }
      }
      break;
    }
  }

  CsvTable table;
  table.had_header = has_header;
  if (has_header) {
    table.column_names = first;
  } else {
    for (std::size_t j = 0; j < ncols; ++j) {
      table.column_names.push_back("x" + std::to_string(j + 1));
    }
  }

  const std::size_t first_data = has_header ? 1 : 0;
  const std::size_t nrows = lines.size() - first_data;
  if (nrows == 0) throw ParseError("file has a header but no data rows: " + path);

  table.values = Matrix(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const std::size_t file_row = first_data + i + 1;  // 1-based for messages
    const std::vector<std::string> fields = split_fields(lines[first_data + i]);
    if (fields.size() != ncols) {
      throw ParseError("row has " + std::to_string(fields.size()) +
                           " fields, expected " + std::to_string(ncols),
                       file_row, "-");
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      double v;
      if (!parse_double(fields[j], v)) {
        throw ParseError("cell \"" + fields[j] + "\" is not numeric", file_row,
                         table.column_names[j]);
      }
      if (!std::isfinite(v)) {
        throw ParseError("cell \"" + fields[j] + "\" is not finite", file_row,
                         table.column_names[j]);
      }
      table.values(i, j) = v;
    }
  }
  return table;
}

std::string format_double(double v) {
  // Shortest of %.15g/%.16g/%.17g that round-trips to identical bits.
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back;
    if (parse_double(buf, back) && std::memcmp(&back, &v, sizeof v) == 0) break;
  }
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + target.parent_path().string());
  }
  const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename " + tmp.string() + " to " + path);
  }
}

std::string csv_to_string(const std::vector<std::string>& names, const Matrix& values) {
  std::ostringstream out;
  if (!names.empty()) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (j) out << ',';
      out << names[j];
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (std::size_t j = 0; j < values.cols(); ++j) {
      if (j) out << ',';
      out << format_double(values(i, j));
    }
    out << '\n';
  }
  return out.str();
}

double kahan_sum(const double* x, std::size_t n) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = x[i] - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace levinfer
