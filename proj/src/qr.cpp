#include "levinfer/qr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "levinfer/errors.hpp"
#include "levinfer/kernels.hpp"

namespace levinfer {

QrFactorization::QrFactorization(const Matrix& a) : m_(a.rows()), n_(a.cols()) {
  if (m_ < n_) {
    throw DomainError("QR factorization requires at least as many rows as columns");
  }
  if (n_ == 0) throw DomainError("QR factorization of an empty matrix");
  qr_.resize(m_ * n_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < m_; ++i) qr_[j * m_ + i] = a(i, j);
  }
  tau_.assign(n_, 0.0);
  factorize();
  compute_singular_values();
}

void QrFactorization::factorize() {
  for (std::size_t k = 0; k < n_; ++k) {
    double* col = qr_.data() + k * m_;
    const std::size_t tail = m_ - k - 1;
    const double alpha = col[k];
    const double sigma = kernels::sum_sq(col + k + 1, tail);
    const double norm = std::sqrt(alpha * alpha + sigma);
    if (norm == 0.0) {
      tau_[k] = 0.0;  // zero column, nothing to reflect
      continue;
    }
    const double beta = alpha >= 0.0 ? -norm : norm;
    tau_[k] = (beta - alpha) / beta;
    kernels::scale_copy(1.0 / (alpha - beta), col + k + 1, col + k + 1, tail);
    col[k] = beta;
    // Apply H_k = I - tau v v^T (v_k = 1) to the remaining columns.
    for (std::size_t j = k + 1; j < n_; ++j) {
      double* cj = qr_.data() + j * m_;
      double d = cj[k] + kernels::dot(col + k + 1, cj + k + 1, tail);
      d *= tau_[k];
      cj[k] -= d;
      kernels::axpy(-d, col + k + 1, cj + k + 1, tail);
    }
  }
}

void QrFactorization::compute_singular_values() {
  // One-sided Jacobi on the columns of R. R is n x n with n small
  // (predictor count), so the O(n^3) sweeps are negligible next to the
  // factorization itself.
  const std::size_t n = n_;
  std::vector<double> w(n * n, 0.0);  // column-major copy of R
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) w[j * n + i] = qr_[j * m_ + i];
  }
  constexpr int kMaxSweeps = 60;
  constexpr double kTol = 1e-15;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double* cp = w.data() + p * n;
        double* cq = w.data() + q * n;
        const double app = kernels::sum_sq(cp, n);
        const double aqq = kernels::sum_sq(cq, n);
        const double apq = kernels::dot(cp, cq, n);
        if (std::fabs(apq) <= kTol * std::sqrt(app * aqq) || apq == 0.0) continue;
        rotated = true;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = cp[i];
          const double vq = cq[i];
          cp[i] = c * vp - s * vq;
          cq[i] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  sv_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sv_[j] = std::sqrt(kernels::sum_sq(w.data() + j * n, n));
  }
  std::sort(sv_.begin(), sv_.end(), std::greater<double>());

  const double sigma_max = sv_.empty() ? 0.0 : sv_.front();
  const double tol = static_cast<double>(std::max(m_, n_)) *
                     std::numeric_limits<double>::epsilon() * sigma_max;
  rank_ = 0;
  for (double s : sv_) {
    if (s > tol && s > 0.0) ++rank_;
  }
}

Vector QrFactorization::solve(const Vector& b) const {
  if (b.size() != m_) throw DomainError("QR solve: right-hand side length mismatch");
  Vector work = b;
  // work <- Q^T b
  for (std::size_t k = 0; k < n_; ++k) {
    if (tau_[k] == 0.0) continue;
    const double* col = qr_.data() + k * m_;
    const std::size_t tail = m_ - k - 1;
    double d = work[k] + kernels::dot(col + k + 1, work.data() + k + 1, tail);
    d *= tau_[k];
    work[k] -= d;
    kernels::axpy(-d, col + k + 1, work.data() + k + 1, tail);
  }
  // Back substitution on R x = (Q^T b)[0..n)
  Vector x(n_);
  for (std::size_t ii = n_; ii-- > 0;) {
    double acc = work[ii];
    for (std::size_t j = ii + 1; j < n_; ++j) acc -= qr_[j * m_ + ii] * x[j];
    x[ii] = acc / qr_[ii * m_ + ii];
  }
  return x;
}

Matrix QrFactorization::gram_inverse() const {
  // B = R^{-1} by back substitution against identity columns, then
  // (A^T A)^{-1} = B B^T.
  const std::size_t n = n_;
  Matrix b(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = col + 1; ii-- > 0;) {
      double acc = (ii == col) ? 1.0 : 0.0;
      for (std::size_t j = ii + 1; j <= col; ++j) acc -= qr_[j * m_ + ii] * b(j, col);
      b(ii, col) = acc / qr_[ii * m_ + ii];
    }
  }
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t k0 = std::max(i, j);
      const double v = kernels::dot(b.row(i) + k0, b.row(j) + k0, n - k0);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

void QrFactorization::solve_r_transposed(const double* x, double* z) const {
  // Forward substitution on R^T z = x; column i of R is contiguous in qr_.
  for (std::size_t i = 0; i < n_; ++i) {
    const double acc = x[i] - kernels::dot(qr_.data() + i * m_, z, i);
    z[i] = acc / qr_[i * m_ + i];
  }
}

}  // namespace levinfer
