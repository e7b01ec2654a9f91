// Copyright 2026 The DSBM Change Point Authors.
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dsbm/cpd/estimators.hpp"

namespace dsbm {

// Fitted probabilities are clipped into [kBootstrapClip, 1 - kBootstrapClip]
// before resampling.
inline constexpr double kBootstrapClip = 1e-9;

struct BootstrapQuantile {
  double level = 0.0;
  int h_quantile = 0;   // type-1 empirical quantile of h at `level`
  double tau_lo = 0.0;  // central interval of coverage `level`
  double tau_hi = 0.0;
};

struct BootstrapResult {
  int tau_index = 0;
  int num_times = 0;
  int h_min = 0;  // admissible offsets
  int h_max = 0;
  std::vector<int> h_samples;
  std::vector<BootstrapQuantile> quantiles;

  // Type-1 (inverse ECDF) quantile of the samples.
  int quantile(double level) const;
  // tau_hat + [q_{alpha/2}, q_{1 - alpha/2}] / n.
  std::pair<double, double> interval(double alpha) const;
};

// Resamples series from the fitted model (communities and block means of
// `fit`, break at fit.tau_index) and, with those parameters held fixed,
// records the offset h minimizing the criterion over breaks
// tau_index + h inside fit.grid (smallest h on ties). Replicate r uses
// derive_seed(seed, r), so the result does not depend on `threads`.
//
// Throws BoundaryError when fit.tau_index lies outside fit.grid.
BootstrapResult adaptive_bootstrap(const ChangePointFit& fit, int replicates,
                                   std::uint64_t seed,
                                   const std::vector<double>& levels,
                                   int threads = 1);

// CSV "replicate,h".
void write_bootstrap_samples_csv(std::ostream& out, const BootstrapResult& result);
// CSV "level,h_quantile,tau_lo,tau_hi".
void write_bootstrap_quantiles_csv(std::ostream& out,
                                   const BootstrapResult& result);

}  // namespace dsbm
