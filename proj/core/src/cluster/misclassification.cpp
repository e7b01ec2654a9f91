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

#include "dsbm/cluster/misclassification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dsbm {
namespace {

constexpr int kExhaustiveLimit = 8;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::string MisclassReport::to_string() const {
  std::string out = std::to_string(rate);
  for (int v : best_permutation) out += ' ' + std::to_string(v + 1);
  return out;
}

Eigen::MatrixXd misclassification_costs(const CommunityAssignment& truth,
                                        const CommunityAssignment& est) {
  if (truth.size() != est.size()) {
    throw std::invalid_argument("misclassification: assignments have " +
                                std::to_string(truth.size()) + " and " +
                                std::to_string(est.size()) + " nodes");
  }
  const int k = std::max(truth.num_communities(), est.num_communities());
  // joint(u, v) = #{i : truth(i) = u, est(i) = v}
  Eigen::MatrixXd joint = Eigen::MatrixXd::Zero(k, k);
  std::vector<int> truth_sizes(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < truth.size(); ++i) {
    joint(truth[i], est[i]) += 1.0;
    ++truth_sizes[static_cast<std::size_t>(truth[i])];
  }
  Eigen::MatrixXd cost(k, k);
  for (int u = 0; u < k; ++u) {
    const double in_u = truth_sizes[static_cast<std::size_t>(u)];
    for (int v = 0; v < k; ++v) {
      const double missed = in_u - joint(u, v);
      const double s_v = truth_sizes[static_cast<std::size_t>(v)];
      cost(u, v) = missed == 0.0 ? 0.0 : (s_v == 0.0 ? kInf : missed / s_v);
    }
  }
  return cost;
}

std::vector<int> solve_assignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols()) {
    throw std::invalid_argument("solve_assignment: cost matrix must be square");
  }
  const auto n = static_cast<int>(cost.rows());
  // Infinite costs become a value larger than any finite matching.
  double finite_total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::isfinite(cost(i, j))) finite_total += std::abs(cost(i, j));
    }
  }
  const double big = 1.0 + 2.0 * finite_total;
  const auto c = [&](int i, int j) {
    return std::isfinite(cost(i, j)) ? cost(i, j) : big;
  };

  // Shortest augmenting path with potentials (1-based internal indexing).
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> match(static_cast<std::size_t>(n) + 1, 0);  // column -> row
  std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
  for (int row = 1; row <= n; ++row) {
    match[0] = row;
    int col0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[static_cast<std::size_t>(col0)] = 1;
      const int row0 = match[static_cast<std::size_t>(col0)];
      double delta = kInf;
      int col1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double reduced = c(row0 - 1, j - 1) - u[static_cast<std::size_t>(row0)] -
                               v[static_cast<std::size_t>(j)];
        if (reduced < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = reduced;
          way[static_cast<std::size_t>(j)] = col0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          col1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      col0 = col1;
    } while (match[static_cast<std::size_t>(col0)] != 0);
    do {
      const int col1 = way[static_cast<std::size_t>(col0)];
      match[static_cast<std::size_t>(col0)] = match[static_cast<std::size_t>(col1)];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) {
    assignment[static_cast<std::size_t>(match[static_cast<std::size_t>(j)] - 1)] = j - 1;
  }
  return assignment;
}

MisclassReport misclassification(const CommunityAssignment& truth,
                                 const CommunityAssignment& est) {
  const Eigen::MatrixXd cost = misclassification_costs(truth, est);
  const auto k = static_cast<int>(cost.rows());
  const auto total = [&](const std::vector<int>& perm) {
    double sum = 0.0;
    for (int u = 0; u < k; ++u) sum += cost(u, perm[static_cast<std::size_t>(u)]);
    return sum;
  };

  MisclassReport report;
  if (k <= kExhaustiveLimit) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    report.best_permutation = perm;
    report.rate = total(perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
      const double value = total(perm);
      if (value < report.rate) {
        report.rate = value;
        report.best_permutation = perm;
      }
    }
  } else {
    report.best_permutation = solve_assignment(cost);
    report.rate = total(report.best_permutation);
  }
  return report;
}

}  // namespace dsbm
