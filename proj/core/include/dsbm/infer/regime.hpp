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
#include <optional>
#include <vector>

#include "dsbm/cpd/estimators.hpp"
#include "dsbm/netcore/types.hpp"

namespace dsbm {

enum class Regime { kI, kII, kIII };

std::string_view to_string(Regime regime);

// A class of node pairs whose parameter shift does not vanish: pre-change
// probability a1, post-change probability a2. `pairs` counts unordered
// node pairs, each an independent Bernoulli unit; `weight` is how many
// times a unit enters the criterion (2 for sums over ordered pairs).
struct PairAtom {
  double a1 = 0.0;
  double a2 = 0.0;
  std::int64_t pairs = 0;
  double weight = 1.0;
};

struct RegimeOptions {
  std::optional<double> theta;  // default n^{-1/4}
  double lower = 0.1;           // gap below: regime II
  double upper = 10.0;          // gap above: regime I
};

// Finite-n versions of the limit quantities. Sums run over ordered pairs
// i != j; probabilities enter p (1 - p) after clipping to [0, 1].
struct RegimeDiagnostics {
  Regime regime = Regime::kIII;
  double theta = 0.0;
  double gap = 0.0;               // sum (lambda_ij - delta_ij)^2, i != j
  double gamma2 = 0.0;            // weights lambda (1 - lambda)
  double gamma2_post = 0.0;       // weights delta (1 - delta)
  std::int64_t k_set_size = 0;    // ordered pairs with |shift| < theta
  double c1_sq = 0.0;             // sum of shift^2 over the small-shift set
  double gamma_tilde_sq = 0.0;    // sum of shift^2 lambda (1 - lambda) there
  std::vector<PairAtom> k0_atoms; // complement, grouped by (a1, a2)
};

// Throws GammaUndefined when the gap is zero.
RegimeDiagnostics regime_diagnostics(const DsbmSpec& spec,
                                     const RegimeOptions& options = {});
RegimeDiagnostics regime_diagnostics(const ChangePointFit& fit,
                                     const RegimeOptions& options = {});

}  // namespace dsbm
