#include "levinfer/dataset.hpp"

#include <cmath>

#include "levinfer/errors.hpp"

namespace levinfer {

namespace {

std::size_t resolve_response(const CsvTable& table, const ColumnRef& response) {
  if (std::holds_alternative<std::size_t>(response)) {
    const std::size_t idx = std::get<std::size_t>(response);
    if (idx >= table.values.cols()) {
      throw DomainError("response column index " + std::to_string(idx) +
                        " out of range (file has " +
                        std::to_string(table.values.cols()) + " columns)");
    }
    return idx;
  }
  const std::string& name = std::get<std::string>(response);
  for (std::size_t j = 0; j < table.column_names.size(); ++j) {
    if (table.column_names[j] == name) return j;
  }
  throw DomainError("response column \"" + name + "\" not present" +
                    (table.had_header ? "" : " (file has no header row)"));
}

}  // namespace

Dataset load_csv(const std::string& path, const ColumnRef& response, HeaderMode header) {
  const CsvTable table = read_csv_table(path, header);
  const std::size_t resp = resolve_response(table, response);
  const std::size_t n = table.values.rows();
  const std::size_t ncols = table.values.cols();
  if (ncols < 2) {
    throw DomainError("dataset needs at least one predictor besides the response");
  }
  const std::size_t p = ncols - 1;

  Dataset dataset;
  dataset.x = Matrix(n, p);
  dataset.y.resize(n);
  dataset.response_name = table.column_names[resp];
  for (std::size_t j = 0; j < ncols; ++j) {
    if (j != resp) dataset.predictor_names.push_back(table.column_names[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t xj = 0;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (j == resp) {
        dataset.y[i] = table.values(i, j);
      } else {
        dataset.x(i, xj++) = table.values(i, j);
      }
    }
  }
  if (n <= p) {
    throw DomainError("N must exceed p (got N=" + std::to_string(n) +
                      ", p=" + std::to_string(p) + ")");
  }
  return dataset;
}

Matrix load_matrix_csv(const std::string& path, HeaderMode header) {
  return read_csv_table(path, header).values;
}

void write_csv(const Dataset& dataset, const std::string& path) {
  std::vector<std::string> names = dataset.predictor_names;
  if (names.size() != dataset.p()) {
    names.clear();
    for (std::size_t j = 0; j < dataset.p(); ++j) {
      names.push_back("x" + std::to_string(j + 1));
    }
  }
  names.push_back(dataset.response_name.empty() ? "y" : dataset.response_name);

  Matrix table(dataset.n(), dataset.p() + 1);
  for (std::size_t i = 0; i < dataset.n(); ++i) {
    for (std::size_t j = 0; j < dataset.p(); ++j) table(i, j) = dataset.x(i, j);
    table(i, dataset.p()) = dataset.y[i];
  }
  atomic_write_file(path, csv_to_string(names, table));
}

std::vector<std::string> validate(const Dataset& dataset) {
  std::vector<std::string> violations;
  const std::size_t n = dataset.x.rows();
  const std::size_t p = dataset.x.cols();
  if (p < 1) violations.push_back("p must be at least 1");
  if (n <= p) {
    violations.push_back("N must exceed p (N=" + std::to_string(n) +
                         ", p=" + std::to_string(p) + ")");
  }
  if (dataset.y.size() != n) {
    violations.push_back("X has " + std::to_string(n) + " rows but Y has length " +
                         std::to_string(dataset.y.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (!std::isfinite(dataset.x(i, j))) {
        violations.push_back("X(" + std::to_string(i) + "," + std::to_string(j) +
                             ") is not finite");
      }
    }
  }
  for (std::size_t i = 0; i < dataset.y.size(); ++i) {
    if (!std::isfinite(dataset.y[i])) {
      violations.push_back("Y(" + std::to_string(i) + ") is not finite");
    }
  }
  return violations;
}

}  // namespace levinfer
