#pragma once

#include <cstddef>

// Inverse CDFs for the standard normal and Student-t distributions,
// implemented in-house so interval endpoints are bit-stable across
// platforms. Both use a closed-form or rational starting approximation
// refined by Newton steps against the CDFs below.

namespace levinfer {

// Standard normal CDF and density.
double normal_cdf(double x);
double normal_pdf(double x);

// Inverse standard normal CDF. q in (0,1); absolute error <= 1e-9
// (in practice near machine precision after refinement).
double normal_quantile(double q);

// Student-t CDF and density with dof >= 1.
double student_t_cdf(double t, std::size_t dof);
double student_t_pdf(double t, std::size_t dof);

// Inverse Student-t CDF. q in (0,1), dof >= 1; absolute error <= 1e-8
// for dof up to 1e6.
double t_quantile(double q, std::size_t dof);

// Regularized incomplete beta I_x(a,b) via Lentz's continued fraction.
// xc is 1-x computed without cancellation by the caller.
double incomplete_beta(double a, double b, double x, double xc);

}  // namespace levinfer
