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

#include <optional>
#include <vector>

#include "dsbm/netcore/series.hpp"
#include "dsbm/netcore/types.hpp"

namespace dsbm {

// Tuning constants of the degree-profile rule. The working threshold is
// B / sqrt(n^delta); the ratio band in case 4 is 1 -+ B* / sqrt(n^delta).
// When c_star and within_minus_between (a - d) are both given, the choice
// rule B / sqrt(n^delta) <= c*/(1 - c*) (a - d) is enforced.
struct DegreeThresholds {
  double b = 1.0;
  double b_star = 1.0;
  double delta = 0.5;
  std::optional<double> c_star;
  std::optional<double> within_minus_between;
};

enum class DegreeCase { k1, k2, k3, k4a, k4b, k4c };

struct DegreeProfileResult {
  CommunityAssignment pre;   // label 0: block of node 0 under z
  CommunityAssignment post;  // label 0: block of node 0 under w
  std::vector<DegreeCase> cases;  // per node; node 0 is always k1
  double threshold = 0.0;
};

// Two-community classifier that compares every node's connection rate with
// node 0 against node 0's within-block level, separately before and after
// the break t_break. The within-block level starts at the largest observed
// rate and is re-estimated as the mean over nodes placed with node 0 until
// it stops changing.
DegreeProfileResult degree_profile_classify(const AdjacencySeries& series,
                                            int t_break,
                                            const DegreeThresholds& thresholds);

}  // namespace dsbm
