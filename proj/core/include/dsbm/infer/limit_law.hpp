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
#include <vector>

#include "dsbm/infer/regime.hpp"

namespace dsbm {

enum class LimitRegime { kII, kIII };

struct LimitLawParams {
  // Regime II: argmax of -|h|/2 + B_h on [-half_width, half_width] with
  // step `step` (standard units), then scaled by gamma2.
  double gamma2 = 1.0;
  double half_width = 50.0;
  double step = 0.01;

  // Regime III: integer walk on [-walk_half_width, walk_half_width].
  double c1_sq = 0.0;
  double gamma_tilde = 0.0;
  std::vector<PairAtom> atoms;
  int walk_half_width = 200;
};

// R draws of the limiting argmax; replicate r uses derive_seed(seed, r).
//
// Regime III increments, for h in Z:
//   D(h+1) - D(h) = sign(-h) c1^2 / 2            (sign(0) = 0)
//   C(h+1) - C(h) = gamma_tilde W_h,  W_h iid N(0, 1)
//   A(h+1) - A(h) = sum over atom units of (Z - a2)^2 - (Z - a1)^2,
//                   Z ~ Bernoulli(a1) for h < 0, Bernoulli(a2) for h >= 0,
// with the process pinned at 0 for h = 0. The A term is oriented so that
// the drift points towards h = 0, consistent with taking the argmax.
std::vector<double> simulate_limit_law(LimitRegime regime,
                                       const LimitLawParams& params,
                                       int replicates, std::uint64_t seed,
                                       int threads = 1);

}  // namespace dsbm
