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

#include "dsbm/infer/limit_law.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dsbm/parallel.hpp"
#include "dsbm/rng.hpp"

namespace dsbm {
namespace {

// Tags separating the two sides of the path.
constexpr std::uint64_t kRightTag = 1;
constexpr std::uint64_t kLeftTag = 2;

double brownian_argmax(const LimitLawParams& p, std::uint64_t seed) {
  const auto steps = static_cast<long>(std::llround(p.half_width / p.step));
  const double sd = std::sqrt(p.step);
  std::normal_distribution<double> normal(0.0, sd);
  double best_value = 0.0;
  long best_step = 0;
  // Left side first so that ties resolve to the smallest h.
  {
    CounterRng rng(derive_seed(seed, kLeftTag));
    double b = 0.0;
    for (long s = 1; s <= steps; ++s) {
      b += normal(rng);
      const double value = -0.5 * s * p.step + b;
      if (value >= best_value) {
        best_value = value;
        best_step = -s;
      }
    }
  }
  {
    CounterRng rng(derive_seed(seed, kRightTag));
    double b = 0.0;
    for (long s = 1; s <= steps; ++s) {
      b += normal(rng);
      const double value = -0.5 * s * p.step + b;
      if (value > best_value) {
        best_value = value;
        best_step = s;
      }
    }
  }
  return static_cast<double>(best_step) * p.step;
}

// Increment V(h + 1) - V(h) of the Regime III process.
double walk_increment(const LimitLawParams& p, long h, CounterRng& rng) {
  const double sign = h > 0 ? -1.0 : (h < 0 ? 1.0 : 0.0);
  double inc = 0.5 * sign * p.c1_sq;
  if (p.gamma_tilde != 0.0) {
    std::normal_distribution<double> normal(0.0, 1.0);
    inc += p.gamma_tilde * normal(rng);
  }
  for (const auto& atom : p.atoms) {
    const double prob = h < 0 ? atom.a1 : atom.a2;
    std::binomial_distribution<std::int64_t> binom(atom.pairs, prob);
    const auto ones = static_cast<double>(binom(rng));
    // sum over units of (Z - a2)^2 - (Z - a1)^2 = N (a2^2 - a1^2) - 2 (a2 - a1) sum Z
    inc += atom.weight * (static_cast<double>(atom.pairs) *
                              (atom.a2 * atom.a2 - atom.a1 * atom.a1) -
                          2.0 * (atom.a2 - atom.a1) * ones);
  }
  return inc;
}

double walk_argmax(const LimitLawParams& p, std::uint64_t seed) {
  const long half = p.walk_half_width;
  double best_value = 0.0;
  long best_h = 0;
  {
    // V(h) = V(h + 1) - increment(h) for h < 0.
    CounterRng rng(derive_seed(seed, kLeftTag));
    double v = 0.0;
    for (long h = -1; h >= -half; --h) {
      v -= walk_increment(p, h, rng);
      if (v >= best_value) {
        best_value = v;
        best_h = h;
      }
    }
  }
  {
    CounterRng rng(derive_seed(seed, kRightTag));
    double v = 0.0;
    for (long h = 0; h < half; ++h) {
      v += walk_increment(p, h, rng);
      if (v > best_value) {
        best_value = v;
        best_h = h + 1;
      }
    }
  }
  return static_cast<double>(best_h);
}

}  // namespace

std::vector<double> simulate_limit_law(LimitRegime regime,
                                       const LimitLawParams& params,
                                       int replicates, std::uint64_t seed,
                                       int threads) {
  if (replicates < 1) throw std::invalid_argument("need at least one replicate");
  if (regime == LimitRegime::kII) {
    if (!(params.gamma2 > 0.0) || !(params.half_width > 0.0) ||
        !(params.step > 0.0) || params.step > params.half_width) {
      throw std::invalid_argument(
          "regime II needs gamma2 > 0 and 0 < step <= half_width");
    }
  } else {
    if (params.c1_sq < 0.0 || params.gamma_tilde < 0.0 ||
        params.walk_half_width < 1) {
      throw std::invalid_argument(
          "regime III needs c1^2 >= 0, gamma_tilde >= 0, half width >= 1");
    }
    for (const auto& atom : params.atoms) {
      if (!(atom.a1 >= 0.0 && atom.a1 <= 1.0 && atom.a2 >= 0.0 &&
            atom.a2 <= 1.0) ||
          atom.pairs < 0) {
        throw std::invalid_argument("atom probabilities must lie in [0, 1]");
      }
    }
  }
  std::vector<double> out(static_cast<std::size_t>(replicates));
  parallel_for(out.size(), threads, [&](std::size_t r) {
    const std::uint64_t key = derive_seed(seed, static_cast<std::uint64_t>(r));
    out[r] = regime == LimitRegime::kII ? params.gamma2 * brownian_argmax(params, key)
                                        : walk_argmax(params, key);
  });
  return out;
}

}  // namespace dsbm
