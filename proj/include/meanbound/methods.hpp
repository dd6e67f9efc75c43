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

#ifndef MEANBOUND_METHODS_HPP
#define MEANBOUND_METHODS_HPP

#include "meanbound/baselines.hpp"
#include "meanbound/bound.hpp"
#include "meanbound/bound_result.hpp"

namespace meanbound {

struct MethodOptions {
  BoundOptions bound;  // tolerance and Monte Carlo settings for our bound
  BootstrapConfig bootstrap;
  Eigen::Index exact_max_n = 50;  // Method::kOurs switches to Monte Carlo above this
};

enum class Side { kUpper, kLower };

/// Computes any supported bound on a [0, 1] sample. Lower bounds are obtained
/// for every method by reflection, 1 - upper(1 - x). value is clamped to
/// [0, 1]; diagnostics.raw_value keeps the unclamped number.
BoundResult compute_bound(Method method, const VectorRef& x, double alpha,
                          const MethodOptions& options, Side side = Side::kUpper);

}  // namespace meanbound

#endif  // MEANBOUND_METHODS_HPP
