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

#include "dsbm/infer/regime.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "dsbm/error.hpp"

namespace dsbm {
namespace {

double bernoulli_variance(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return p * (1.0 - p);
}

RegimeDiagnostics diagnose(const CommunityAssignment& z, const BlockMatrix& lambda,
                           const CommunityAssignment& w, const BlockMatrix& delta,
                           int num_times, const RegimeOptions& options) {
  if (z.size() != w.size()) {
    throw std::invalid_argument("regime_diagnostics: node counts differ");
  }
  RegimeDiagnostics d;
  d.theta = options.theta.value_or(std::pow(static_cast<double>(num_times), -0.25));
  if (!(d.theta > 0.0)) throw std::invalid_argument("theta must be positive");
  if (!(options.lower <= options.upper)) {
    throw std::invalid_argument("regime thresholds must satisfy lower <= upper");
  }
  const int m = z.size();
  double weighted_pre = 0.0;
  double weighted_post = 0.0;
  std::map<std::pair<double, double>, std::int64_t> atoms;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const double a1 = lambda(z[i], z[j]);
      const double a2 = delta(w[i], w[j]);
      const double s2 = (a1 - a2) * (a1 - a2);
      d.gap += s2;
      weighted_pre += s2 * bernoulli_variance(a1);
      weighted_post += s2 * bernoulli_variance(a2);
      if (std::abs(a1 - a2) < d.theta) {
        ++d.k_set_size;
        d.c1_sq += s2;
        d.gamma_tilde_sq += s2 * bernoulli_variance(a1);
      } else if (i < j) {
        ++atoms[{a1, a2}];
      }
    }
  }
  if (d.gap == 0.0) throw GammaUndefined();
  d.gamma2 = weighted_pre / d.gap;
  d.gamma2_post = weighted_post / d.gap;
  for (const auto& [key, pairs] : atoms) {
    d.k0_atoms.push_back({key.first, key.second, pairs, 2.0});
  }
  d.regime = d.gap < options.lower   ? Regime::kII
             : d.gap > options.upper ? Regime::kI
                                     : Regime::kIII;
  return d;
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kI:
      return "I";
    case Regime::kII:
      return "II";
    case Regime::kIII:
      return "III";
  }
  return "?";
}

RegimeDiagnostics regime_diagnostics(const DsbmSpec& spec,
                                     const RegimeOptions& options) {
  return diagnose(spec.pre_assignment(), spec.pre_matrix(),
                  spec.post_assignment(), spec.post_matrix(), spec.num_times(),
                  options);
}

RegimeDiagnostics regime_diagnostics(const ChangePointFit& fit,
                                     const RegimeOptions& options) {
  return diagnose(fit.z_hat, fit.lambda_hat, fit.w_hat, fit.delta_hat,
                  fit.num_times, options);
}

}  // namespace dsbm
