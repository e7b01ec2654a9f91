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

#include "dsbm/infer/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dsbm/cpd/criterion.hpp"
#include "dsbm/error.hpp"
#include "dsbm/netcore/sampler.hpp"
#include "dsbm/parallel.hpp"
#include "dsbm/rng.hpp"

namespace dsbm {
namespace {

int type1_quantile(std::vector<int> sorted_samples, double level) {
  if (sorted_samples.empty()) throw std::runtime_error("no bootstrap samples");
  if (!(level >= 0.0 && level <= 1.0)) {
    throw std::invalid_argument("quantile level must lie in [0, 1]");
  }
  const auto r = static_cast<double>(sorted_samples.size());
  const auto rank = static_cast<std::size_t>(
      std::max(1.0, std::ceil(level * r - 1e-12)));
  return sorted_samples[std::min(rank, sorted_samples.size()) - 1];
}

}  // namespace

int BootstrapResult::quantile(double level) const {
  std::vector<int> sorted = h_samples;
  std::sort(sorted.begin(), sorted.end());
  return type1_quantile(std::move(sorted), level);
}

std::pair<double, double> BootstrapResult::interval(double alpha) const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  const double tau = static_cast<double>(tau_index) / num_times;
  return {tau + quantile(alpha / 2.0) / static_cast<double>(num_times),
          tau + quantile(1.0 - alpha / 2.0) / static_cast<double>(num_times)};
}

BootstrapResult adaptive_bootstrap(const ChangePointFit& fit, int replicates,
                                   std::uint64_t seed,
                                   const std::vector<double>& levels,
                                   int threads) {
  if (replicates < 1) throw std::invalid_argument("need at least one replicate");
  const int n = fit.num_times;
  const int tau = fit.tau_index;
  if (!fit.grid.contains(tau)) {
    throw BoundaryError("bootstrap window is empty: estimated break " +
                        std::to_string(tau) + " lies outside the grid [" +
                        std::to_string(fit.grid.t_min()) + ", " +
                        std::to_string(fit.grid.t_max()) + "]");
  }
  const DsbmSpec model = DsbmSpec::with_change_index(
      fit.z_hat, fit.lambda_hat.clipped(kBootstrapClip, 1.0 - kBootstrapClip),
      fit.w_hat, fit.delta_hat.clipped(kBootstrapClip, 1.0 - kBootstrapClip),
      tau, n);

  BootstrapResult result;
  result.tau_index = tau;
  result.num_times = n;
  result.h_min = fit.grid.t_min() - tau;
  result.h_max = fit.grid.t_max() - tau;
  result.h_samples.resize(static_cast<std::size_t>(replicates));
  parallel_for(static_cast<std::size_t>(replicates), threads, [&](std::size_t r) {
    const AdjacencySeries series =
        sample_dsbm(model, derive_seed(seed, static_cast<std::uint64_t>(r)));
    const std::vector<double> criterion = fixed_parameter_criterion(
        series, fit.z_hat, fit.lambda_hat, fit.w_hat, fit.delta_hat);
    int best = fit.grid.t_min();
    for (int t = fit.grid.t_min() + 1; t <= fit.grid.t_max(); ++t) {
      if (criterion[static_cast<std::size_t>(t)] <
          criterion[static_cast<std::size_t>(best)]) {
        best = t;
      }
    }
    result.h_samples[r] = best - tau;
  });

  std::vector<int> sorted = result.h_samples;
  std::sort(sorted.begin(), sorted.end());
  for (double level : levels) {
    if (!(level > 0.0 && level < 1.0)) {
      throw std::invalid_argument("bootstrap levels must lie in (0, 1)");
    }
    BootstrapQuantile q;
    q.level = level;
    q.h_quantile = type1_quantile(sorted, level);
    const double tau_hat = static_cast<double>(tau) / n;
    q.tau_lo = tau_hat + type1_quantile(sorted, (1.0 - level) / 2.0) /
                             static_cast<double>(n);
    q.tau_hi = tau_hat + type1_quantile(sorted, (1.0 + level) / 2.0) /
                             static_cast<double>(n);
    result.quantiles.push_back(q);
  }
  return result;
}

void write_bootstrap_samples_csv(std::ostream& out,
                                 const BootstrapResult& result) {
  out << "replicate,h\n";
  for (std::size_t r = 0; r < result.h_samples.size(); ++r) {
    out << r + 1 << ',' << result.h_samples[r] << '\n';
  }
}

void write_bootstrap_quantiles_csv(std::ostream& out,
                                   const BootstrapResult& result) {
  out << "level,h_quantile,tau_lo,tau_hi\n";
  for (const auto& q : result.quantiles) {
    out << q.level << ',' << q.h_quantile << ',' << q.tau_lo << ',' << q.tau_hi
        << '\n';
  }
}

}  // namespace dsbm
