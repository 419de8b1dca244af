#pragma once

#include <cstddef>
#include <vector>

#include "levinfer/matrix.hpp"

namespace levinfer {

// Householder QR of an m x n matrix with m >= n, held in packed column-major
// form (reflectors below the diagonal, R on and above). Column storage keeps
// every reflector application a contiguous dot/axpy, which is what the SIMD
// kernels want.
//
// Singular values are those of R (equal to A's); computed eagerly by
// one-sided Jacobi on the n x n triangle, so rank queries are cheap. Callers
// must check full_column_rank() before solve()/gram_inverse().
class QrFactorization {
 public:
  explicit QrFactorization(const Matrix& a);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  // Least squares: argmin_x ||b - A x||_2, b.size() == rows().
  Vector solve(const Vector& b) const;

  // (A^T A)^{-1} = R^{-1} R^{-T}.
  Matrix gram_inverse() const;

  // Solves R^T z = x for one length-n vector; ||z||^2 = x^T (A^T A)^{-1} x.
  void solve_r_transposed(const double* x, double* z) const;

  // Descending singular values of A.
  const std::vector<double>& singular_values() const { return sv_; }

  // Count of singular values above max(m,n) * eps * sigma_max.
  std::size_t numerical_rank() const { return rank_; }
  bool full_column_rank() const { return rank_ == n_; }

  double r_entry(std::size_t i, std::size_t j) const {  // i <= j
    return qr_[j * m_ + i];
  }

 private:
  void factorize();
  void compute_singular_values();

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<double> qr_;   // column-major m x n
  std::vector<double> tau_;  // Householder scalars
  std::vector<double> sv_;
  std::size_t rank_ = 0;
};

}  // namespace levinfer
