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

#include <string>
#include <vector>

#include "dsbm/netcore/types.hpp"

namespace dsbm {

struct MisclassReport {
  double rate = 0.0;
  // best_permutation[u] is the estimated label matched to true label u.
  std::vector<int> best_permutation;

  // "rate p1 p2 ... pK" with 1-based labels.
  std::string to_string() const;
};

// cost(u, v) = #{i : truth(i) = u, est(i) != v} / s_v, where s_v is the size
// of true block v. An empty true block v costs 0 when no node is charged to
// it and +infinity otherwise.
Eigen::MatrixXd misclassification_costs(const CommunityAssignment& truth,
                                        const CommunityAssignment& est);

// Block-size weighted misclassification rate minimized over label
// permutations. Exhaustive search for K <= 8, optimal assignment above.
// Assignments with different K are padded to the larger one.
MisclassReport misclassification(const CommunityAssignment& truth,
                                 const CommunityAssignment& est);

// Minimum-cost perfect matching on a square cost matrix; returns
// assignment[row] = column. O(K^3).
std::vector<int> solve_assignment(const Eigen::MatrixXd& cost);

}  // namespace dsbm
