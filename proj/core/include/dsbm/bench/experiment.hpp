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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsbm/bench/scenario.hpp"
#include "dsbm/cpd/estimators.hpp"
#include "dsbm/infer/snr.hpp"
#include "dsbm/netcore/series.hpp"

namespace dsbm {

struct ExperimentOptions {
  int threads = 1;
  std::optional<double> c_star;
  ClusterVariant variant = ClusterVariant::kAdjacencySum;
};

struct MethodOutcome {
  Method method = Method::kTwoStep;
  // Estimated break index -> replicate count; failed replicates under 0.
  std::map<int, int> frequencies;
  int failures = 0;
  double mean_misclass_pre = 0.0;   // over successful replicates
  double mean_misclass_post = 0.0;
  double seconds = 0.0;             // summed estimator wall-clock

  int count_at(int tau_index) const;
  // "30(83) 28(10) 31(7)": by count descending, then index ascending.
  std::string frequency_string() const;
};

struct ExperimentReport {
  ScenarioSpec scenario;
  int tau_index = 0;
  int num_communities = 0;
  int replicates = 0;
  std::uint64_t seed = 0;
  std::optional<SnrReport> snr;
  std::vector<MethodOutcome> methods;
  // digest of the series of every replicate; all methods saw these series.
  std::vector<std::uint64_t> series_digests;
  std::vector<std::string> notes;

  const MethodOutcome& outcome(Method method) const;
};

// Paired Monte Carlo experiment: replicate r samples one series with
// derive_seed(seed, r) and runs every method on it. Estimator failures are
// counted per replicate, not propagated. Results do not depend on
// options.threads.
ExperimentReport run_experiment(const ScenarioSpec& scenario,
                                const std::vector<Method>& methods,
                                int replicates, std::uint64_t seed,
                                const ExperimentOptions& options = {});

// Seed passed to `method` on replicate r.
std::uint64_t method_seed(std::uint64_t replicate_seed, Method method);

// One row per report: scenario,m,n,K,tau_index,F_n,snr_er,snr_dsbm,
// a1_first,a1_second followed by freq/exact/misclass_pre/misclass_post/
// failures columns for each method of the first report. Wall-clock columns
// only with include_timing (they break byte-identical output).
void write_report_csv(std::ostream& out,
                      const std::vector<ExperimentReport>& reports,
                      bool include_timing = false);

struct TrajectoryRequest {
  std::vector<Method> methods;
  int k = 2;
  std::uint64_t seed = 0;
  std::optional<double> c_star;
  // Needed for Method::kKnown.
  std::optional<CommunityAssignment> z;
  std::optional<CommunityAssignment> w;
};

// Long CSV "method,t_break,b,criterion" for every requested method. When
// svg_path is set, also writes a line plot of the trajectories against b.
void emit_trajectory(std::ostream& csv, const AdjacencySeries& series,
                     const TrajectoryRequest& request,
                     const std::optional<std::filesystem::path>& svg_path =
                         std::nullopt);

}  // namespace dsbm
