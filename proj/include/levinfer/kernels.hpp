#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel primitives behind the regression, leverage and simulation
// loops. Every operation has a scalar reference implementation plus SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected once at startup from
// CPU capabilities. The dispatched entry points must agree with the scalar
// reference within floating-point reassociation error; tests/test_kernels.cpp
// holds the equivalence suite.
//
// LEVINFER_KERNELS=scalar|avx2|neon forces a backend (unknown or unsupported
// values fall back to the best available).

namespace levinfer::kernels {

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum_sq(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale_copy(double alpha, const double* x, double* out, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum_sq(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale_copy(double alpha, const double* x, double* out, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
double sum_sq(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale_copy(double alpha, const double* x, double* out, std::size_t n);
}  // namespace neon
#endif

// Runtime-dispatched entry points.
double dot(const double* a, const double* b, std::size_t n);
double sum_sq(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale_copy(double alpha, const double* x, double* out, std::size_t n);

// Name of the backend the dispatcher resolved to: "scalar", "avx2" or "neon".
std::string_view active_backend();

}  // namespace levinfer::kernels
