#pragma once

#include <cstdint>
#include <vector>

#include "levinfer/matrix.hpp"

namespace levinfer {

// Statistical leverage scores: the diagonal of the hat matrix
// H = X (X^T X)^{-1} X^T, i.e. h_i = x_i^T (X^T X)^{-1} x_i.
struct LeverageScores {
  std::vector<double> h;
  bool exact = false;
};

// Sampling distribution over observations: strictly positive, sums to one.
// floor_mix is the uniform mixing weight lambda in
// pi_i = (1 - lambda) h_i / sum(h) + lambda / N.
struct SamplingPlan {
  std::vector<double> pi;
  double floor_mix = 0.0;
};

// Exact scores through a Householder QR of X: h_i = ||R^{-T} x_i||^2, which
// equals the squared row norm of the thin Q without ever forming the N x N
// hat matrix. Requires full column rank (smallest singular value above
// max(N,p) * eps * largest); otherwise throws RankDeficiencyError carrying
// the numerical rank.
LeverageScores exact_leverage(const Matrix& x);

// Approximate scores from a caller-supplied sketched design (sketch_rows x p):
// the exact-score formula applied against the sketched Gram matrix. Scores
// are clamped to [0,1]. Throws RankDeficiencyError when the sketched Gram is
// rank deficient (no silent regularization).
LeverageScores leverage_from_sketch(const Matrix& sketched_design, const Matrix& x);

// Gaussian sketch: sketch_size x N matrix of iid standard normals scaled by
// 1/sqrt(sketch_size), applied to X, then leverage_from_sketch. Deterministic
// given the seed. Requires sketch_size >= p.
LeverageScores sketched_leverage(const Matrix& x, std::size_t sketch_size,
                                 std::uint64_t seed);

std::size_t default_sketch_size(std::size_t p);  // max(2p, 200)

// pi_i = (1-lambda) h_i / sum(h) + lambda / N with lambda in [0,1).
// Throws ZeroProbabilityError when lambda = 0 and some score is zero, and
// DomainError when all scores are zero.
SamplingPlan make_plan(const LeverageScores& scores, double floor_mix);

}  // namespace levinfer
