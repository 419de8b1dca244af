#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levinfer {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// Domain -> exit 1, Io/Parse -> exit 2.
enum class ErrorKind { Domain, Io, Parse };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(ErrorKind::Io, msg) {}
};

// Malformed input data; carries the 1-based row and the column label of the
// offending cell when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t row, std::string column)
      : Error(ErrorKind::Parse,
              msg + " (row " + std::to_string(row) + ", column " + column + ")"),
        row_(row),
        column_(std::move(column)) {}
  explicit ParseError(const std::string& msg)
      : Error(ErrorKind::Parse, msg), row_(0) {}

  std::size_t row() const { return row_; }
  const std::string& column() const { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(ErrorKind::Domain, msg) {}
};

class RankDeficiencyError : public DomainError {
 public:
  RankDeficiencyError(std::size_t numerical_rank, std::size_t required)
      : DomainError("matrix is rank deficient: numerical rank " +
                    std::to_string(numerical_rank) + ", required " +
                    std::to_string(required)),
        numerical_rank_(numerical_rank) {}
  std::size_t numerical_rank() const { return numerical_rank_; }

 private:
  std::size_t numerical_rank_;
};

class SingularSampleError : public DomainError {
 public:
  SingularSampleError(std::size_t numerical_rank, std::size_t required)
      : DomainError("sampled design is singular (numerical rank " +
                    std::to_string(numerical_rank) + ", required " +
                    std::to_string(required) +
                    "); increase r or the floor-mix weight"),
        numerical_rank_(numerical_rank) {}
  std::size_t numerical_rank() const { return numerical_rank_; }

 private:
  std::size_t numerical_rank_;
};

class ZeroProbabilityError : public DomainError {
 public:
  explicit ZeroProbabilityError(const std::string& msg) : DomainError(msg) {}
};

}  // namespace levinfer
