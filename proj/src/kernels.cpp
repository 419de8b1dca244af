#include "levinfer/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace levinfer::kernels {

// ============================================================================
// Scalar reference kernels
// ============================================================================

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_sq(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sum_sq_diff(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_copy(double alpha, const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = alpha * x[i];
}

}  // namespace scalar

// ============================================================================
// Dispatch
// ============================================================================

namespace {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_sq)(const double*, std::size_t);
  double (*sum_sq_diff)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale_copy)(double, const double*, double*, std::size_t);
  const char* name;
};

constexpr KernelTable kScalarTable = {
    scalar::dot, scalar::sum_sq, scalar::sum_sq_diff,
    scalar::axpy, scalar::scale_copy, "scalar"};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2Table = {
    avx2::dot, avx2::sum_sq, avx2::sum_sq_diff,
    avx2::axpy, avx2::scale_copy, "avx2"};

bool host_has_avx2_fma() {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}
#endif

#if defined(__aarch64__)
constexpr KernelTable kNeonTable = {
    neon::dot, neon::sum_sq, neon::sum_sq_diff,
    neon::axpy, neon::scale_copy, "neon"};
#endif

const KernelTable& resolve_table() {
  const char* forced = std::getenv("LEVINFER_KERNELS");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
    return kScalarTable;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (host_has_avx2_fma() &&
      (forced == nullptr || std::strcmp(forced, "avx2") == 0)) {
    return kAvx2Table;
  }
#endif
#if defined(__aarch64__)
  if (forced == nullptr || std::strcmp(forced, "neon") == 0) {
    return kNeonTable;
  }
#endif
  return kScalarTable;
}

const KernelTable& table() {
  static const KernelTable& t = resolve_table();
  return t;
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  return table().dot(a, b, n);
}
double sum_sq(const double* a, std::size_t n) { return table().sum_sq(a, n); }
double sum_sq_diff(const double* a, const double* b, std::size_t n) {
  return table().sum_sq_diff(a, b, n);
}
void axpy(double alpha, const double* x, double* y, std::size_t n) {
  table().axpy(alpha, x, y, n);
}
void scale_copy(double alpha, const double* x, double* out, std::size_t n) {
  table().scale_copy(alpha, x, out, n);
}

std::string_view active_backend() { return table().name; }

}  // namespace levinfer::kernels
