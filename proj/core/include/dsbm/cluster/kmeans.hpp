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

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "dsbm/netcore/types.hpp"

namespace dsbm {

struct KMeansOptions {
  int restarts = 10;
  int max_iterations = 100;
  double tolerance = 1e-8;  // relative objective decrease that stops Lloyd
  double epsilon = 0.0;     // approximation slack, must be >= 0
};

struct KMeansResult {
  CommunityAssignment assignment;
  Eigen::MatrixXd centers;       // K x d
  double objective = 0.0;        // within-cluster sum of squares
  int restart = 0;               // restart that produced the result
  // Objective after every assignment step of the selected restart.
  std::vector<double> history;
};

// K-means++ seeding followed by Lloyd iterations, repeated over independent
// restarts; returns the restart with the smallest objective (earliest on
// ties), which is trivially within (1 + epsilon) of the best found. An empty
// cluster during Lloyd is reseeded with the point farthest from its center.
//
// Throws DegenerateClusters when the rows hold fewer than K distinct points.
KMeansResult kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                    const KMeansOptions& options = {});

CommunityAssignment approx_kmeans(const Eigen::MatrixXd& points, int k,
                                  double epsilon, std::uint64_t seed);

// Number of distinct rows (exact comparison).
int distinct_rows(const Eigen::MatrixXd& points);

}  // namespace dsbm
