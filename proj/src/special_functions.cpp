// Copyright 2026 The meanbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "meanbound/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace meanbound {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 100000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) return h;
  }
  throw std::runtime_error("beta_cdf: continued fraction did not converge");
}

}  // namespace

BetaParams::BetaParams(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b)))
    throw std::invalid_argument("BetaParams: shape parameters must be positive");
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: argument must be positive");
  if (std::isinf(x)) return x;
  static constexpr std::array<double, 14> kCoefficients = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double series = 0.999999999999997092;
  for (double c : kCoefficients) series += c / ++y;
  return tmp + std::log(2.5066282746310005 * series / x);
}

double log_beta(const BetaParams& p) {
  return log_gamma(p.a()) + log_gamma(p.b()) - log_gamma(p.a() + p.b());
}

double beta_cdf(double x, const BetaParams& p) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("beta_cdf: x outside [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double a = p.a();
  const double b = p.b();
  const double log_front = a * std::log(x) + b * std::log1p(-x) - log_beta(p);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double beta_pdf(double x, const BetaParams& p) {
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  return std::exp((p.a() - 1.0) * std::log(x) + (p.b() - 1.0) * std::log1p(-x) - log_beta(p));
}

double beta_inv_cdf(double q, const BetaParams& p) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("beta_inv_cdf: q outside [0, 1]");
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;

  double lo = 0.0;
  double hi = 1.0;
  double x = p.a() / (p.a() + p.b());
  bool converged = false;
  for (int iter = 0; iter < 200; ++iter) {
    const double f = beta_cdf(x, p) - q;
    if (f == 0.0) return x;
    if (f < 0.0)
      lo = x;
    else
      hi = x;
    const double density = beta_pdf(x, p);
    double next = density > 0.0 ? x - f / density : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * kEps * std::max(x, 1e-300) || hi - lo <= kEps * hi) {
      x = next;
      converged = true;
      break;
    }
    x = next;
  }
  if (converged) return std::clamp(x, 0.0, 1.0);

  // Plain bisection until the bracket cannot shrink further.
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (beta_cdf(mid, p) < q)
      lo = mid;
    else
      hi = mid;
  }
  return std::clamp(0.5 * (lo + hi), 0.0, 1.0);
}

double student_t_quantile(double level, int dof) {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("student_t_quantile: level must lie in (0, 1)");
  if (dof < 1) throw std::invalid_argument("student_t_quantile: dof must be >= 1");
  if (level == 0.5) return 0.0;
  const double nu = dof;
  const bool upper = level > 0.5;
  // Two-sided tail mass beyond |t|.
  const double tail = upper ? 2.0 * (1.0 - level) : 2.0 * level;
  double magnitude;
  if (tail < 0.5) {
    // x = nu / (nu + t^2) ~ Beta(nu/2, 1/2) has CDF equal to the tail mass.
    const double x = beta_inv_cdf(tail, BetaParams(0.5 * nu, 0.5));
    magnitude = std::sqrt(nu * (1.0 - x) / x);
  } else {
    // Complement y = t^2 / (nu + t^2) ~ Beta(1/2, nu/2), avoids cancellation in 1 - x.
    const double y = beta_inv_cdf(1.0 - tail, BetaParams(0.5, 0.5 * nu));
    magnitude = std::sqrt(nu * y / (1.0 - y));
  }
  return upper ? magnitude : -magnitude;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double level) {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("normal_quantile: level must lie in (0, 1)");
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;
  double x;
  if (level < kLow) {
    const double q = std::sqrt(-2.0 * std::log(level));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (level <= 1.0 - kLow) {
    const double q = level - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-level));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley step; uses the upper tail near 1 to keep relative accuracy.
  const double e = level > 0.5 ? -(0.5 * std::erfc(x / std::numbers::sqrt2) - (1.0 - level))
                               : 0.5 * std::erfc(-x / std::numbers::sqrt2) - level;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace meanbound
