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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dsbm/bench/scenario.hpp"
#include "dsbm/cpd/estimators.hpp"
#include "dsbm/netcore/types.hpp"

namespace dsbm {

// Run configuration as read from a YAML file:
//
//   scenario: {name: II, m: 60, n: 60, tau: 0.5, ...}   # ScenarioSpec fields
//   methods: [2step, every_point]
//   reps: 100
//   seed: 20240601
//   threads: 1
//   grid: {c_star: 0.1}          # optional
//   variant: adjacency_sum       # clustering variant
struct RunConfig {
  ScenarioSpec scenario;
  std::vector<Method> methods = {Method::kTwoStep, Method::kEveryPoint};
  int reps = 100;
  std::uint64_t seed = 20240601;
  int threads = 1;
  std::optional<double> c_star;
  ClusterVariant variant = ClusterVariant::kAdjacencySum;
};

RunConfig parse_run_config(const std::string& yaml_text);
RunConfig load_run_config(const std::filesystem::path& path);
std::string to_yaml(const RunConfig& config);

ScenarioSpec parse_scenario_yaml(const std::string& yaml_text);
std::string to_yaml(const ScenarioSpec& spec);

// Exact (17 significant digit) text form of a model: labels are 1-based.
std::string to_yaml(const DsbmSpec& spec);
DsbmSpec parse_dsbm_spec_yaml(const std::string& yaml_text);

}  // namespace dsbm
