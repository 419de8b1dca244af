#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "levinfer/kernels.hpp"

namespace levinfer {

using Vector = std::vector<double>;

// Dense row-major matrix. Row-major because the library's hot paths walk and
// sample rows (observations); column-oriented work (QR) copies into packed
// column storage internally.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// out_i = <row_i(a), x>
inline Vector matvec(const Matrix& a, const Vector& x) {
  assert(x.size() == a.cols());
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out[i] = kernels::dot(a.row(i), x.data(), a.cols());
  }
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      kernels::axpy(arow[k], b.row(k), crow, b.cols());
    }
  }
  return c;
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) {
    const double v = a.data()[i] < 0 ? -a.data()[i] : a.data()[i];
    if (v > m) m = v;
  }
  return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) {
    double d = a.data()[i] - b.data()[i];
    if (d < 0) d = -d;
    if (d > m) m = d;
  }
  return m;
}

inline double frobenius_norm(const Matrix& a) {
  return std::sqrt(kernels::sum_sq(a.data(), a.rows() * a.cols()));
}

}  // namespace levinfer
