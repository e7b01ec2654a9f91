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

#include "dsbm/cluster/degree_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsbm {
namespace {

constexpr int kMaxRefinements = 10;

// Connection rate of node 0 with every node over [t_lo, t_hi].
Eigen::VectorXd rates_from_first(const AdjacencySeries& series, int t_lo,
                                 int t_hi) {
  const int m = series.num_nodes();
  const auto hi = series.prefix(t_hi);
  const auto lo = series.prefix(t_lo - 1);
  Eigen::VectorXd rate = Eigen::VectorXd::Zero(m);
  const double len = t_hi - t_lo + 1;
  for (int j = 1; j < m; ++j) {
    const std::size_t p = pair_index(0, j, m);
    rate(j) = (hi[p] - lo[p]) / len;
  }
  return rate;
}

// Differences between node 0's within-block level and each rate. The level
// starts at the largest rate and is refined to the mean rate of the nodes
// within `threshold` of it.
Eigen::VectorXd level_differences(const Eigen::VectorXd& rate,
                                  double threshold) {
  const auto m = static_cast<int>(rate.size());
  double level = rate.tail(m - 1).maxCoeff();
  for (int iter = 0; iter < kMaxRefinements; ++iter) {
    double sum = 0.0;
    int count = 0;
    for (int j = 1; j < m; ++j) {
      if (level - rate(j) <= threshold) {
        sum += rate(j);
        ++count;
      }
    }
    if (count == 0) break;
    const double next = sum / count;
    if (next == level) break;
    level = next;
  }
  Eigen::VectorXd diff = level - rate.array();
  diff(0) = 0.0;
  return diff;
}

}  // namespace

DegreeProfileResult degree_profile_classify(const AdjacencySeries& series,
                                            int t_break,
                                            const DegreeThresholds& thresholds) {
  const int n = series.num_times();
  const int m = series.num_nodes();
  if (t_break < 1 || t_break > n - 1) {
    throw std::invalid_argument("degree_profile_classify: break outside 1..n-1");
  }
  if (m < 2) throw std::invalid_argument("degree_profile_classify: need m >= 2");
  if (!(thresholds.b > 0.0) || !(thresholds.b_star > 0.0) ||
      !(thresholds.delta > 0.0 && thresholds.delta < 1.0)) {
    throw std::invalid_argument(
        "degree_profile_classify: need B, B* > 0 and delta in (0, 1)");
  }
  const double scale = std::sqrt(std::pow(static_cast<double>(n), thresholds.delta));
  const double threshold = thresholds.b / scale;
  const double band = thresholds.b_star / scale;
  if (thresholds.c_star && thresholds.within_minus_between) {
    const double c = *thresholds.c_star;
    const double limit = c / (1.0 - c) * *thresholds.within_minus_between;
    if (threshold > limit) {
      throw std::invalid_argument(
          "degree_profile_classify: B / sqrt(n^delta) = " +
          std::to_string(threshold) + " exceeds c*/(1-c*)(a-d) = " +
          std::to_string(limit));
    }
  }

  const Eigen::VectorXd gamma =
      level_differences(rates_from_first(series, 1, t_break), threshold);
  const Eigen::VectorXd delta =
      level_differences(rates_from_first(series, t_break + 1, n), threshold);

  DegreeProfileResult out;
  out.threshold = threshold;
  out.cases.resize(static_cast<std::size_t>(m));
  std::vector<int> pre(static_cast<std::size_t>(m));
  std::vector<int> post(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const bool g_small = gamma(j) <= threshold;
    const bool d_small = delta(j) <= threshold;
    DegreeCase c;
    if (g_small && d_small) {
      c = DegreeCase::k1;
    } else if (g_small) {
      c = DegreeCase::k2;
    } else if (d_small) {
      c = DegreeCase::k3;
    } else {
      const double ratio = gamma(j) / delta(j);
      if (ratio <= 1.0 - band) {
        c = DegreeCase::k4a;
      } else if (ratio > 1.0 + band) {
        c = DegreeCase::k4b;
      } else {
        c = DegreeCase::k4c;
      }
    }
    out.cases[static_cast<std::size_t>(j)] = c;
    const bool in_z =
        c == DegreeCase::k1 || c == DegreeCase::k2 || c == DegreeCase::k4a;
    const bool in_w =
        c == DegreeCase::k1 || c == DegreeCase::k3 || c == DegreeCase::k4b;
    pre[static_cast<std::size_t>(j)] = in_z ? 0 : 1;
    post[static_cast<std::size_t>(j)] = in_w ? 0 : 1;
  }
  out.pre = CommunityAssignment(std::move(pre), 2);
  out.post = CommunityAssignment(std::move(post), 2);
  return out;
}

}  // namespace dsbm
