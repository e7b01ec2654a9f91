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

#include "dsbm/cluster/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dsbm/error.hpp"
#include "dsbm/rng.hpp"

namespace dsbm {
namespace {

struct Run {
  std::vector<int> labels;
  Eigen::MatrixXd centers;
  double objective = 0.0;
  std::vector<double> history;
};

// Index of the nearest center (smallest index on ties) and its distance.
std::pair<int, double> nearest(const Eigen::MatrixXd& points, int i,
                               const Eigen::MatrixXd& centers) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int c = 0; c < centers.rows(); ++c) {
    const double d = (points.row(i) - centers.row(c)).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return {best, best_d};
}

Eigen::MatrixXd seed_plus_plus(const Eigen::MatrixXd& points, int k,
                               CounterRng& rng) {
  const auto m = static_cast<int>(points.rows());
  Eigen::MatrixXd centers(k, points.cols());
  auto first = static_cast<int>(rng.uniform() * m);
  centers.row(0) = points.row(std::min(first, m - 1));
  std::vector<double> d2(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    d2[static_cast<std::size_t>(i)] = (points.row(i) - centers.row(0)).squaredNorm();
  }
  for (int c = 1; c < k; ++c) {
    const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
    int pick = m - 1;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      for (int i = 0; i < m; ++i) {
        acc += d2[static_cast<std::size_t>(i)];
        if (acc > target && d2[static_cast<std::size_t>(i)] > 0.0) {
          pick = i;
          break;
        }
      }
      // Rounding can leave target above acc; fall back to the last
      // positive-weight point.
      if (acc <= target) {
        for (int i = m - 1; i >= 0; --i) {
          if (d2[static_cast<std::size_t>(i)] > 0.0) {
            pick = i;
            break;
          }
        }
      }
    }
    centers.row(c) = points.row(pick);
    for (int i = 0; i < m; ++i) {
      d2[static_cast<std::size_t>(i)] =
          std::min(d2[static_cast<std::size_t>(i)],
                   (points.row(i) - centers.row(c)).squaredNorm());
    }
  }
  return centers;
}

Run lloyd(const Eigen::MatrixXd& points, Eigen::MatrixXd centers,
          const KMeansOptions& options) {
  const auto m = static_cast<int>(points.rows());
  const auto k = static_cast<int>(centers.rows());
  Run run;
  run.labels.assign(static_cast<std::size_t>(m), 0);
  std::vector<double> dist(static_cast<std::size_t>(m));
  double previous = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    double objective = 0.0;
    for (int i = 0; i < m; ++i) {
      const auto [c, d] = nearest(points, i, centers);
      run.labels[static_cast<std::size_t>(i)] = c;
      dist[static_cast<std::size_t>(i)] = d;
      objective += d;
    }
    // Reseed empty clusters with the point farthest from its center.
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int label : run.labels) ++counts[static_cast<std::size_t>(label)];
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) continue;
      int far = -1;
      for (int i = 0; i < m; ++i) {
        if (counts[static_cast<std::size_t>(run.labels[static_cast<std::size_t>(i)])] < 2) {
          continue;
        }
        if (far < 0 || dist[static_cast<std::size_t>(i)] >
                           dist[static_cast<std::size_t>(far)]) {
          far = i;
        }
      }
      if (far < 0) break;
      --counts[static_cast<std::size_t>(run.labels[static_cast<std::size_t>(far)])];
      run.labels[static_cast<std::size_t>(far)] = c;
      counts[static_cast<std::size_t>(c)] = 1;
      objective -= dist[static_cast<std::size_t>(far)];
      dist[static_cast<std::size_t>(far)] = 0.0;
      centers.row(c) = points.row(far);
    }
    run.history.push_back(objective);
    run.objective = objective;

    // Update step.
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    for (int i = 0; i < m; ++i) {
      sums.row(run.labels[static_cast<std::size_t>(i)]) += points.row(i);
    }
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        centers.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];
      }
    }
    if (previous - objective <= options.tolerance * std::max(1.0, objective)) {
      break;
    }
    previous = objective;
  }
  run.centers = std::move(centers);
  return run;
}

}  // namespace

int distinct_rows(const Eigen::MatrixXd& points) {
  const auto m = static_cast<int>(points.rows());
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  const auto less = [&](int a, int b) {
    for (int c = 0; c < points.cols(); ++c) {
      if (points(a, c) != points(b, c)) return points(a, c) < points(b, c);
    }
    return false;
  };
  std::sort(idx.begin(), idx.end(), less);
  int distinct = m > 0 ? 1 : 0;
  for (int i = 1; i < m; ++i) {
    if (less(idx[static_cast<std::size_t>(i - 1)], idx[static_cast<std::size_t>(i)])) {
      ++distinct;
    }
  }
  return distinct;
}

KMeansResult kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                    const KMeansOptions& options) {
  const auto m = static_cast<int>(points.rows());
  if (k < 1) throw std::invalid_argument("kmeans: K must be positive");
  if (options.epsilon < 0.0) throw std::invalid_argument("kmeans: epsilon < 0");
  if (options.restarts < 1) throw std::invalid_argument("kmeans: restarts < 1");
  if (m < k) throw DegenerateClusters(k, m);
  const int distinct = distinct_rows(points);
  if (distinct < k) throw DegenerateClusters(k, distinct);

  KMeansResult best;
  best.objective = std::numeric_limits<double>::infinity();
  for (int r = 0; r < options.restarts; ++r) {
    CounterRng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    Run run = lloyd(points, seed_plus_plus(points, k, rng), options);
    if (run.objective < best.objective) {
      best.assignment = CommunityAssignment(std::move(run.labels), k);
      best.centers = std::move(run.centers);
      best.objective = run.objective;
      best.history = std::move(run.history);
      best.restart = r;
    }
  }
  return best;
}

CommunityAssignment approx_kmeans(const Eigen::MatrixXd& points, int k,
                                  double epsilon, std::uint64_t seed) {
  KMeansOptions options;
  options.epsilon = epsilon;
  return kmeans(points, k, seed, options).assignment;
}

}  // namespace dsbm
