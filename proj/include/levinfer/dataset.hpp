#pragma once

#include <string>
#include <variant>
#include <vector>

#include "levinfer/csv.hpp"
#include "levinfer/matrix.hpp"

namespace levinfer {

// Regression inputs: N x p predictor matrix and length-N response.
// Immutable after construction; safe to share across threads.
struct Dataset {
  Matrix x;
  Vector y;
  std::vector<std::string> predictor_names;
  std::string response_name;

  std::size_t n() const { return x.rows(); }
  std::size_t p() const { return x.cols(); }
};

// Response column selected by 0-based index or by header name.
using ColumnRef = std::variant<std::size_t, std::string>;

// Loads a dataset: the response column becomes Y, all remaining columns
// become X in file order. Row order is preserved. Throws IoError,
// ParseError, or DomainError (absent response column, N <= p).
Dataset load_csv(const std::string& path, const ColumnRef& response,
                 HeaderMode header = HeaderMode::Auto);

// Loads every column as a predictor (no response); used by leverage-only
// workflows.
Matrix load_matrix_csv(const std::string& path, HeaderMode header = HeaderMode::Auto);

// Writes the dataset with a header row (predictors then response). Values
// round-trip bit-exactly through load_csv.
void write_csv(const Dataset& dataset, const std::string& path);

// Returns every Dataset invariant violation found; empty means valid.
// Violations are data, not errors: no exceptions.
std::vector<std::string> validate(const Dataset& dataset);

}  // namespace levinfer
