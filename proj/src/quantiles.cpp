#include "levinfer/quantiles.hpp"

#include <cmath>
#include <limits>

#include "levinfer/errors.hpp"

namespace levinfer {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kPi = 3.14159265358979323846;

// Rational starting approximation for the inverse normal CDF
// (Acklam 2003, |error| < 1.15e-9 before refinement).
double normal_quantile_approx(double q) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (q < p_low) {
    const double u = std::sqrt(-2.0 * std::log(q));
    return (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
           ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  }
  if (q > 1.0 - p_low) {
    const double u = std::sqrt(-2.0 * std::log(1.0 - q));
    return -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
           ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  }
  const double u = q - 0.5;
  const double t = u * u;
  return (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * u /
         (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
}

// Hill's starting approximation for the lower-tail t quantile (u <= 1/2).
// G. W. Hill, Algorithm 396, CACM 13(10), 1970. Returns a value <= 0.
double t_quantile_hill(double ndf, double u) {
  if (ndf > 1e20) return normal_quantile(u);

  const double a = 1.0 / (ndf - 0.5);
  const double b = 48.0 / (a * a);
  double c = ((20700.0 * a / b - 98.0) * a - 16.0) * a + 96.36;
  const double d =
      ((94.5 / (b + c) - 3.0) / b + 1.0) * std::sqrt(a * kPi / 2.0) * ndf;
  double y = std::pow(d * 2.0 * u, 2.0 / ndf);

  if (y > 0.05 + a) {
    // Asymptotic inverse expansion about the normal quantile.
    const double x = normal_quantile(u);
    y = x * x;
    if (ndf < 5.0) c += 0.3 * (ndf - 4.5) * (x + 0.6);
    c += (((0.05 * d * x - 5.0) * x - 7.0) * x - 2.0) * x + b;
    y = (((((0.4 * y + 6.3) * y + 36.0) * y + 94.5) / c - y - 3.0) / b + 1.0) * x;
    y = std::expm1(a * y * y);
  } else {
    y = ((1.0 / (((ndf + 6.0) / (ndf * y) - 0.089 * d - 0.822) * (ndf + 2.0) * 3.0) +
          0.5 / (ndf + 4.0)) *
             y -
         1.0) *
            (ndf + 1.0) / (ndf + 2.0) +
        1.0 / y;
  }
  return -std::sqrt(ndf * y);
}

// Continued fraction for the incomplete beta (Lentz's method).
double beta_cont_frac(double a, double b, double x) {
  constexpr int kMaxIter = 2000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  return h;  // converged to working precision or hit the cap; good enough
             // for the Newton refinement that consumes it
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("normal_quantile: q must lie in (0,1)");
  }
  if (q == 0.5) return 0.0;
  double x = normal_quantile_approx(q);
  // One Halley step against the CDF removes the approximation error.
  const double e = normal_cdf(x) - q;
  const double u = e / normal_pdf(x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double incomplete_beta(double a, double b, double x, double xc) {
  if (x <= 0.0) return 0.0;
  if (xc <= 0.0) return 1.0;
  // log of x^a (1-x)^b / B(a,b); log1p(-xc) == log(x) without cancellation
  // when x is near 1.
  const double log_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                        a * std::log1p(-xc) + b * std::log(xc);
  const double bt = std::exp(log_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cont_frac(a, b, x) / a;
  }
  return 1.0 - bt * beta_cont_frac(b, a, xc) / b;
}

double student_t_cdf(double t, std::size_t dof) {
  if (dof < 1) throw DomainError("student_t_cdf: dof must be >= 1");
  const double v = static_cast<double>(dof);
  const double t2 = t * t;
  const double x = v / (v + t2);        // incomplete-beta argument
  const double xc = t2 / (v + t2);      // 1-x, cancellation free
  const double half_tail = 0.5 * incomplete_beta(0.5 * v, 0.5, x, xc);
  return t >= 0.0 ? 1.0 - half_tail : half_tail;
}

double student_t_pdf(double t, std::size_t dof) {
  if (dof < 1) throw DomainError("student_t_pdf: dof must be >= 1");
  const double v = static_cast<double>(dof);
  const double log_pdf = std::lgamma(0.5 * (v + 1.0)) - std::lgamma(0.5 * v) -
                         0.5 * std::log(v * kPi) -
                         0.5 * (v + 1.0) * std::log1p(t * t / v);
  return std::exp(log_pdf);
}

double t_quantile(double q, std::size_t dof) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("t_quantile: q must lie in (0,1)");
  }
  if (dof < 1) throw DomainError("t_quantile: dof must be >= 1");
  if (q == 0.5) return 0.0;

  // Closed forms for one and two degrees of freedom.
  if (dof == 1) return std::tan(kPi * (q - 0.5));
  if (dof == 2) return (2.0 * q - 1.0) * std::sqrt(2.0 / (4.0 * q * (1.0 - q)));

  const double v = static_cast<double>(dof);
  double t;
  if (q < 0.5) {
    t = t_quantile_hill(v, q);
  } else {
    t = -t_quantile_hill(v, 1.0 - q);
  }

  // Newton refinement against the in-house CDF.
  for (int iter = 0; iter < 3; ++iter) {
    const double err = student_t_cdf(t, dof) - q;
    const double dens = student_t_pdf(t, dof);
    if (dens <= 0.0) break;
    const double step = err / dens;
    t -= step;
    if (std::fabs(step) <= 1e-13 * (1.0 + std::fabs(t))) break;
  }
  return t;
}

}  // namespace levinfer
