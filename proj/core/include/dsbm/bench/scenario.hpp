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

#include <optional>
#include <string>
#include <vector>

#include "dsbm/netcore/types.hpp"

namespace dsbm {

// Parameterization of a synthetic DSBM experiment.
//
// Named models (two halves unless noted; "alternating" means node 2i-1 in
// community 1 and node 2i in community 2):
//   I    halves -> alternating, Lambda = Delta = [[.6, .6 - n^-delta], .]
//   II   halves,  Lambda = [[.6, .3], .], Delta = Lambda + n^-1/4
//   III  thirds, communities 1 and 3 merge; Lambda_13 = .6 - n^-1/20
//   IV   halves -> alternating, [[n^-lambda, n^-lambda - n^-delta], .]
//   V    halves,  Lambda = [[2 n^-lambda, n^-lambda], .], Delta = Lambda + n^-1/4
//   G    blocks round(9m/20) / rest, Lambda = p1 I, Delta = (p1 + n^-1/2) I
// Generic models use `within`/`between`:
//   reallocation  halves -> alternating, Lambda = Delta
//   connectivity  halves, Delta = Lambda + shift (+ shift_over_sqrt_n / sqrt n)
//   merge         thirds, communities 1 and 3 merge (Delta_11 = within)
//   split         merge with the two regimes swapped
//   custom        explicit labels and matrices; without post_matrix,
//                 Delta = Lambda + shift + shift_over_sqrt_n / sqrt(n)
// Model parameterizations may leave [0, 1] for some exponents; block
// matrices are then kept nominal and the sampler clamps.
struct ScenarioSpec {
  std::string name = "II";
  int m = 60;
  int n = 60;
  double tau = 0.5;

  double delta = 0.05;   // I, IV
  double lambda = 0.5;   // IV, V
  double p1 = 0.894427190999916;  // G: sqrt(0.8)

  double within = 0.6;
  double between = 0.3;
  double shift = 0.0;
  double shift_over_sqrt_n = 0.0;

  // custom only; labels are 1-based.
  std::vector<int> pre_labels;
  std::vector<int> post_labels;
  std::optional<Eigen::MatrixXd> pre_matrix;
  std::optional<Eigen::MatrixXd> post_matrix;

  friend bool operator==(const ScenarioSpec& a, const ScenarioSpec& b);
};

// Names accepted by build_scenario.
const std::vector<std::string>& scenario_names();

// Expands a scenario into a model. Throws std::invalid_argument for unknown
// names, tau outside (0, 1), non-positive exponents or missing custom
// fields.
DsbmSpec build_scenario(const ScenarioSpec& spec);

// Assumptions made while expanding the scenario (e.g. block proportions
// scaled from the 60-node layout); empty when none.
std::vector<std::string> scenario_notes(const ScenarioSpec& spec);

}  // namespace dsbm
