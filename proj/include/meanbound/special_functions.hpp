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

#ifndef MEANBOUND_SPECIAL_FUNCTIONS_HPP
#define MEANBOUND_SPECIAL_FUNCTIONS_HPP

namespace meanbound {

/// Shape parameters of a beta distribution; both must be positive.
class BetaParams {
 public:
  BetaParams(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

/// ln Gamma(x) for x > 0 (Lanczos approximation, g = 671/128).
double log_gamma(double x);

/// ln B(a, b).
double log_beta(const BetaParams& p);

/// Regularized incomplete beta function I_x(a, b), i.e. the Beta(a, b) CDF.
///
/// Evaluated with the modified Lentz continued fraction on whichever of
/// (x; a, b) and (1 - x; b, a) converges faster. Throws for x outside [0, 1].
double beta_cdf(double x, const BetaParams& p);

/// Beta(a, b) density; 0 outside (0, 1).
double beta_pdf(double x, const BetaParams& p);

/// Inverse of beta_cdf in x. Newton steps safeguarded by a bisection bracket;
/// if the safeguarded iteration stalls, finishes with plain bisection.
double beta_inv_cdf(double q, const BetaParams& p);

/// Quantile of Student's t distribution, via the incomplete beta relation.
double student_t_quantile(double level, int dof);

double normal_cdf(double x);

/// Standard normal quantile: Acklam's rational approximation plus one Halley
/// refinement against erfc.
double normal_quantile(double level);

}  // namespace meanbound

#endif  // MEANBOUND_SPECIAL_FUNCTIONS_HPP
